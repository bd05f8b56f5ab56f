#include "mixdag/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mixdag/errors.hpp"
#include "mixdag/rng.hpp"

namespace mixdag {

namespace {

constexpr double kRowSumTolerance = 1e-12;

// X-variable parents of `v` in `g`, T excluded, ascending.
std::vector<VarId> x_parents(const Dag& g, VarId v, VarId t_var) {
  std::vector<VarId> out;
  for (VarId pa : g.parents(v))
    if (pa != t_var) out.push_back(pa);
  return out;
}

int product_of_cards(const std::vector<int>& cards) {
  int total = 1;
  for (int c : cards) total *= c;
  return total;
}

Cpt compile_cpt(VarId variable, const std::vector<VarId>& parents,
                const std::vector<int>& all_cards, const CptTable& table,
                const std::string& context) {
  Cpt cpt;
  cpt.variable = variable;
  cpt.parents = parents;
  cpt.card = all_cards[static_cast<size_t>(variable)];
  for (VarId pa : parents)
    cpt.parent_cards.push_back(all_cards[static_cast<size_t>(pa)]);
  int rows = product_of_cards(cpt.parent_cards);
  if (static_cast<int>(table.size()) != rows)
    throw Error(Errc::shape_mismatch,
                context + ": expected " + std::to_string(rows) +
                    " parent configurations, got " +
                    std::to_string(table.size()));
  cpt.values.reserve(static_cast<size_t>(rows) * cpt.card);
  for (const std::vector<double>& row : table) {
    if (static_cast<int>(row.size()) != cpt.card)
      throw Error(Errc::shape_mismatch,
                  context + ": row length " + std::to_string(row.size()) +
                      " does not match cardinality " +
                      std::to_string(cpt.card));
    double sum = 0.0;
    for (double x : row) {
      if (!(x >= 0.0))
        throw Error(Errc::not_normalized, context + ": negative entry");
      sum += x;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance)
      throw Error(Errc::not_normalized,
                  context + ": row sums to " + std::to_string(sum));
    cpt.values.insert(cpt.values.end(), row.begin(), row.end());
  }
  return cpt;
}

CptTable to_table(const Cpt& cpt) {
  CptTable table;
  table.reserve(static_cast<size_t>(cpt.rows()));
  for (int r = 0; r < cpt.rows(); ++r) {
    std::vector<double> row(static_cast<size_t>(cpt.card));
    for (int s = 0; s < cpt.card; ++s) row[static_cast<size_t>(s)] =
        cpt.value(r, s);
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace

int Cpt::row_for(std::span<const int> x_config) const {
  int row = 0;
  for (size_t i = 0; i < parents.size(); ++i)
    row = row * parent_cards[i] + x_config[static_cast<size_t>(parents[i])];
  return row;
}

MixtureModel::MixtureModel(MotherGraph mg, std::vector<int> cards,
                           std::vector<int> kappa, std::vector<double> mixing,
                           std::vector<std::vector<Cpt>> cpts)
    : mg_(std::move(mg)),
      cards_(std::move(cards)),
      kappa_(std::move(kappa)),
      mixing_(std::move(mixing)),
      cpts_(std::move(cpts)) {}

const Cpt& MixtureModel::cpt(VarId x, int t) const {
  const auto& tables = cpts_.at(static_cast<size_t>(x));
  return tables.size() == 1 ? tables.front()
                            : tables.at(static_cast<size_t>(t));
}

MixtureModel build_model(const MotherGraph& mg, std::vector<int> cards,
                         std::vector<int> kappa, std::vector<double> mixing,
                         const std::vector<std::vector<CptTable>>& cpts) {
  int p = mg.var_count();
  int q = mg.subdag_count();

  if (static_cast<int>(cards.size()) != p)
    throw Error(Errc::shape_mismatch,
                "expected one cardinality per X variable");
  for (int c : cards)
    if (c < 2)
      throw Error(Errc::shape_mismatch, "cardinalities must be at least 2");

  if (kappa.empty())
    throw Error(Errc::shape_mismatch, "at least one time point is required");
  std::vector<bool> hit(static_cast<size_t>(q), false);
  for (int k : kappa) {
    if (k < 0 || k >= q)
      throw Error(Errc::shape_mismatch, "kappa entry out of range");
    hit[static_cast<size_t>(k)] = true;
  }
  for (int k = 0; k < q; ++k)
    if (!hit[static_cast<size_t>(k)])
      throw Error(Errc::kappa_not_surjective,
                  "no time point maps to sub-DAG " + std::to_string(k + 1));
  int m = static_cast<int>(kappa.size());

  if (static_cast<int>(mixing.size()) != m)
    throw Error(Errc::shape_mismatch,
                "mixing length must equal the number of time points");
  double total = 0.0;
  for (double w : mixing) {
    if (!(w >= 0.0))
      throw Error(Errc::not_normalized, "mixing has a negative entry");
    total += w;
  }
  if (std::abs(total - 1.0) > kRowSumTolerance)
    throw Error(Errc::not_normalized,
                "mixing sums to " + std::to_string(total));

  if (static_cast<int>(cpts.size()) != p)
    throw Error(Errc::shape_mismatch, "expected one CPT group per X variable");

  std::vector<std::vector<Cpt>> compiled(static_cast<size_t>(p));
  for (VarId i = 0; i < p; ++i) {
    const auto& group = cpts[static_cast<size_t>(i)];
    if (mg.is_stationary(i)) {
      if (group.size() != 1)
        throw Error(Errc::shape_mismatch,
                    "stationary variable " + std::to_string(i) +
                        " expects exactly one table");
      auto parents = x_parents(mg.subdag(0), i, mg.t());
      compiled[static_cast<size_t>(i)].push_back(
          compile_cpt(i, parents, cards, group.front(),
                      "variable " + std::to_string(i)));
    } else {
      if (static_cast<int>(group.size()) != m)
        throw Error(Errc::shape_mismatch,
                    "non-stationary variable " + std::to_string(i) +
                        " expects one table per time point");
      for (int t = 0; t < m; ++t) {
        auto parents = x_parents(mg.subdag(kappa[static_cast<size_t>(t)]), i,
                                 mg.t());
        compiled[static_cast<size_t>(i)].push_back(compile_cpt(
            i, parents, cards, group[static_cast<size_t>(t)],
            "variable " + std::to_string(i) + ", time point " +
                std::to_string(t + 1)));
      }
    }
  }
  return MixtureModel(mg, std::move(cards), std::move(kappa),
                      std::move(mixing), std::move(compiled));
}

MixtureModel random_model(const MotherGraph& mg, int cardinality,
                          uint64_t seed) {
  if (cardinality < 2)
    throw Error(Errc::invalid_argument, "cardinality must be at least 2");
  int p = mg.var_count();
  int q = mg.subdag_count();
  Rng rng(seed);

  std::vector<int> cards(static_cast<size_t>(p), cardinality);
  std::vector<int> kappa(static_cast<size_t>(q));
  for (int k = 0; k < q; ++k) kappa[static_cast<size_t>(k)] = k;
  std::vector<double> mixing = rng.simplex(q);

  auto random_table = [&](const std::vector<VarId>& parents) {
    int rows = 1;
    for (size_t i = 0; i < parents.size(); ++i) rows *= cardinality;
    CptTable table;
    table.reserve(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) table.push_back(rng.simplex(cardinality));
    return table;
  };

  std::vector<std::vector<CptTable>> cpts(static_cast<size_t>(p));
  for (VarId i = 0; i < p; ++i) {
    if (mg.is_stationary(i)) {
      cpts[static_cast<size_t>(i)].push_back(
          random_table(x_parents(mg.subdag(0), i, mg.t())));
    } else {
      for (int t = 0; t < q; ++t)
        cpts[static_cast<size_t>(i)].push_back(
            random_table(x_parents(mg.subdag(t), i, mg.t())));
    }
  }
  return build_model(mg, std::move(cards), std::move(kappa), std::move(mixing),
                     cpts);
}

MixtureModel component_model(const MixtureModel& model, int t) {
  if (t < 0 || t >= model.time_point_count())
    throw Error(Errc::bad_query, "time point out of range");
  const MotherGraph& mg = model.graph();
  int k = model.subdag_of_time(t);
  MotherGraph sub({mg.subdag(k)});
  std::vector<std::vector<CptTable>> cpts(
      static_cast<size_t>(mg.var_count()));
  for (VarId i = 0; i < mg.var_count(); ++i)
    cpts[static_cast<size_t>(i)].push_back(to_table(model.cpt(i, t)));
  return build_model(sub, model.cardinalities(), {0}, {1.0}, cpts);
}

JointTable::JointTable(std::vector<VarId> vars, std::vector<int> cards,
                       std::vector<double> probs)
    : vars_(std::move(vars)), cards_(std::move(cards)),
      probs_(std::move(probs)) {
  if (vars_.size() != cards_.size())
    throw Error(Errc::shape_mismatch, "one cardinality per table variable");
  size_t expected = 1;
  for (int c : cards_) expected *= static_cast<size_t>(c);
  if (probs_.size() != expected)
    throw Error(Errc::shape_mismatch, "probability array size mismatch");
}

double JointTable::total_mass() const {
  double total = 0.0;
  for (double x : probs_) total += x;
  return total;
}

double JointTable::at(std::span<const int> config) const {
  if (config.size() != vars_.size())
    throw Error(Errc::bad_query, "configuration length mismatch");
  size_t idx = 0;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (config[i] < 0 || config[i] >= cards_[i])
      throw Error(Errc::bad_query, "configuration value out of range");
    idx = idx * static_cast<size_t>(cards_[i]) + static_cast<size_t>(config[i]);
  }
  return probs_[idx];
}

JointTable JointTable::marginal(const VarSet& keep) const {
  for (VarId v : keep)
    if (std::find(vars_.begin(), vars_.end(), v) == vars_.end())
      throw Error(Errc::bad_query,
                  "marginal over a variable not in the table");
  std::vector<VarId> kept_vars;
  std::vector<int> kept_cards;
  std::vector<size_t> kept_pos;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (keep.contains(vars_[i])) {
      kept_vars.push_back(vars_[i]);
      kept_cards.push_back(cards_[i]);
      kept_pos.push_back(i);
    }
  }
  size_t out_size = 1;
  for (int c : kept_cards) out_size *= static_cast<size_t>(c);
  std::vector<double> out(out_size, 0.0);

  std::vector<int> config(vars_.size(), 0);
  for (double prob : probs_) {
    size_t idx = 0;
    for (size_t i = 0; i < kept_pos.size(); ++i)
      idx = idx * static_cast<size_t>(kept_cards[i]) +
            static_cast<size_t>(config[kept_pos[i]]);
    out[idx] += prob;
    for (size_t i = config.size(); i-- > 0;) {
      if (++config[i] < cards_[i]) break;
      config[i] = 0;
    }
  }
  return JointTable(std::move(kept_vars), std::move(kept_cards),
                    std::move(out));
}

JointTable joint_table(const MixtureModel& model, size_t cell_budget) {
  int p = model.var_count();
  const std::vector<int>& cards = model.cardinalities();
  size_t total = 1;
  for (int c : cards) {
    if (total > cell_budget / static_cast<size_t>(c))
      throw Error(Errc::budget_exceeded,
                  "joint table exceeds the cell budget of " +
                      std::to_string(cell_budget));
    total *= static_cast<size_t>(c);
  }

  int m = model.time_point_count();
  std::vector<double> probs(total, 0.0);
  std::vector<int> config(static_cast<size_t>(p), 0);
  for (size_t idx = 0; idx < total; ++idx) {
    double cell = 0.0;
    for (int t = 0; t < m; ++t) {
      double term = model.mixing()[static_cast<size_t>(t)];
      for (VarId i = 0; i < p; ++i) {
        const Cpt& cpt = model.cpt(i, t);
        term *= cpt.value(cpt.row_for(config),
                          config[static_cast<size_t>(i)]);
      }
      cell += term;
    }
    probs[idx] = cell;
    for (size_t i = config.size(); i-- > 0;) {
      if (++config[i] < cards[i]) break;
      config[i] = 0;
    }
  }
  std::vector<VarId> vars(static_cast<size_t>(p));
  for (VarId i = 0; i < p; ++i) vars[static_cast<size_t>(i)] = i;
  return JointTable(std::move(vars), cards, std::move(probs));
}

CiReport ci_test(const JointTable& table, const VarSet& a, const VarSet& b,
                 const VarSet& c, double threshold) {
  if (a.empty() || b.empty())
    throw Error(Errc::bad_query, "endpoint sets must be non-empty");
  if (a.intersects(b) || a.intersects(c) || b.intersects(c))
    throw Error(Errc::overlapping_sets, "query sets must be disjoint");
  if (!(threshold > 0.0))
    throw Error(Errc::bad_query, "threshold must be positive");

  JointTable sub = table.marginal(a | b | c);
  JointTable mc = sub.marginal(c);
  JointTable mac = sub.marginal(a | c);
  JointTable mbc = sub.marginal(b | c);

  // positions and strides of a marginal's variables inside `sub`
  auto indexer = [&sub](const JointTable& m) {
    std::vector<size_t> pos;
    for (VarId v : m.vars())
      pos.push_back(static_cast<size_t>(
          std::find(sub.vars().begin(), sub.vars().end(), v) -
          sub.vars().begin()));
    return pos;
  };
  std::vector<size_t> pos_c = indexer(mc);
  std::vector<size_t> pos_ac = indexer(mac);
  std::vector<size_t> pos_bc = indexer(mbc);

  auto index_into = [](const JointTable& m, const std::vector<size_t>& pos,
                       const std::vector<int>& config) {
    size_t idx = 0;
    for (size_t i = 0; i < pos.size(); ++i)
      idx = idx * static_cast<size_t>(m.cards()[i]) +
            static_cast<size_t>(config[pos[i]]);
    return idx;
  };

  double max_dev = 0.0;
  std::vector<int> config(sub.vars().size(), 0);
  for (double pabc : sub.probs()) {
    double pc = mc.probs()[index_into(mc, pos_c, config)];
    if (pc > 0.0) {
      double pac = mac.probs()[index_into(mac, pos_ac, config)];
      double pbc = mbc.probs()[index_into(mbc, pos_bc, config)];
      double dev = std::abs(pabc / pc - (pac / pc) * (pbc / pc));
      max_dev = std::max(max_dev, dev);
    }
    for (size_t i = config.size(); i-- > 0;) {
      if (++config[i] < sub.cards()[i]) break;
      config[i] = 0;
    }
  }
  return CiReport{max_dev <= threshold, max_dev, threshold};
}

std::vector<std::string> default_names(int p) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(p));
  for (int i = 1; i <= p; ++i) names.push_back("X" + std::to_string(i));
  return names;
}

Dataset sample(const MixtureModel& model, int n, uint64_t seed,
               const std::vector<std::string>& names) {
  if (n < 0) throw Error(Errc::invalid_argument, "sample size must be >= 0");
  int p = model.var_count();
  Dataset data;
  data.columns = names.empty() ? default_names(p) : names;
  if (static_cast<int>(data.columns.size()) != p)
    throw Error(Errc::shape_mismatch, "expected one name per X variable");
  data.columns.push_back("component");

  Rng rng(seed);
  const MotherGraph& mg = model.graph();
  data.rows.reserve(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    int t = rng.categorical(model.mixing());
    const Dag& g = mg.subdag(model.subdag_of_time(t));
    std::vector<int> values(static_cast<size_t>(p), 0);
    for (VarId v : g.topological_order()) {
      if (v == mg.t()) continue;
      const Cpt& cpt = model.cpt(v, t);
      int row = cpt.row_for(values);
      std::span<const double> dist(cpt.values.data() +
                                       static_cast<size_t>(row) * cpt.card,
                                   static_cast<size_t>(cpt.card));
      values[static_cast<size_t>(v)] = rng.categorical(dist);
    }
    values.push_back(t + 1);  // 1-based component label
    data.rows.push_back(std::move(values));
  }
  return data;
}

std::string to_csv(const Dataset& data) {
  std::ostringstream out;
  for (size_t i = 0; i < data.columns.size(); ++i) {
    if (i > 0) out << ',';
    out << data.columns[i];
  }
  out << '\n';
  for (const auto& row : data.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mixdag
