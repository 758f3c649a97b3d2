#include "graphcake/oracle.hpp"

#include <algorithm>
#include <limits>

#include "graphcake/errors.hpp"

namespace graphcake {

namespace {

using Score = std::int64_t;

class GridSearch {
 public:
  GridSearch(const Instance& inst, const GridSearchConfig& cfg) : inst_(inst), cfg_(cfg) {
    const CakeGraph& g = inst.graph;
    n_ = inst.agent_count();
    d_ = cfg.grid;
    cells_ = g.edge_count() * d_;
    const std::size_t points = g.vertex_count() + g.edge_count() * (d_ - 1);
    left_.resize(cells_);
    right_.resize(cells_);
    last_touch_.assign(points, 0);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      for (std::size_t i = 0; i < d_; ++i) {
        const std::size_t c = e * d_ + i;
        left_[c] = i == 0 ? g.edge(e).u : interior(e, i);
        right_[c] = i + 1 == d_ ? g.edge(e).v : interior(e, i + 1);
        last_touch_[left_[c]] = std::max(last_touch_[left_[c]], c);
        last_touch_[right_[c]] = std::max(last_touch_[right_[c]], c);
      }
    }
    scale_values();
    parent_.resize(cells_);
    size_.resize(cells_);
    max_last_.resize(cells_);
    owner_.assign(cells_, 0);
    at_point_.resize(points);
    value_.assign(n_, 0);
    comps_.assign(n_, 0);
    dead_.assign(n_, 0);
  }

  GridSearchResult run() {
    search(0);
    GridSearchResult out;
    out.states = states_;
    if (!have_best_) {
      out.feasible = false;
      out.optimum = 0;
      out.witness.pieces.assign(n_, Piece());
      return out;
    }
    const bool minimise = cfg_.objective == Objective::kMinEgalitarianCost || cfg_.objective == Objective::kMinInequity;
    out.optimum = Rational(mpz_class(minimise ? -best_ : best_), scale_);
    out.optimum.canonicalize();
    std::vector<std::vector<Interval>> parts(n_);
    for (std::size_t c = 0; c < cells_; ++c) {
      const auto i = static_cast<long>(c % d_), d = static_cast<long>(d_);
      parts[best_owner_[c]].push_back(Interval{c / d_, make_rational(i, d), make_rational(i + 1, d)});
    }
    for (auto& p : parts) out.witness.pieces.emplace_back(std::move(p));
    return out;
  }

 private:
  std::size_t interior(EdgeIndex e, std::size_t j) const {
    return inst_.graph.vertex_count() + e * (d_ - 1) + (j - 1);
  }

  void scale_values() {
    std::vector<std::vector<Rational>> exact(n_, std::vector<Rational>(cells_));
    mpz_class common = cfg_.frontier_threshold.get_den();
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t c = 0; c < cells_; ++c) {
        const EdgeIndex e = c / d_;
        exact[a][c] = inst_.agents[a].edge(e).integral(make_rational(static_cast<long>(c % d_), static_cast<long>(d_)),
                                                       make_rational(static_cast<long>(c % d_ + 1), static_cast<long>(d_)));
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), exact[a][c].get_den_mpz_t());
      }
    }
    // Totals are 1, so every scaled sum stays below `common`.
    if (common > mpz_class(std::numeric_limits<Score>::max() / 4)) {
      throw Error(ErrorKind::kBudgetExceeded, "valuation denominators are too large for the grid oracle");
    }
    scale_ = common;
    cell_value_.assign(n_, std::vector<Score>(cells_));
    suffix_.assign(n_, std::vector<Score>(cells_ + 1, 0));
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t c = 0; c < cells_; ++c) {
        const mpz_class scaled = exact[a][c].get_num() * (common / exact[a][c].get_den());
        cell_value_[a][c] = scaled.get_si();
      }
      for (std::size_t c = cells_; c-- > 0;) suffix_[a][c] = suffix_[a][c + 1] + cell_value_[a][c];
    }
    const mpz_class t = cfg_.frontier_threshold.get_num() * (common / cfg_.frontier_threshold.get_den());
    threshold_ = t.get_si();
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  struct Union {
    std::size_t child, root;
    std::size_t old_max;
  };

  bool meets(Score v) const { return cfg_.frontier_strict ? v > threshold_ : v >= threshold_; }

  // Larger is better for every objective; minimisation objectives are negated.
  std::optional<Score> bound(std::size_t next) const {
    switch (cfg_.objective) {
      case Objective::kMaxEgalitarianWelfare: {
        Score ub = std::numeric_limits<Score>::max();
        for (std::size_t a = 0; a < n_; ++a) ub = std::min(ub, value_[a] + suffix_[a][next]);
        return ub;
      }
      case Objective::kMinEgalitarianCost:
        return -*std::max_element(value_.begin(), value_.end());
      case Objective::kMinInequity: {
        Score low = std::numeric_limits<Score>::max();
        for (std::size_t a = 0; a < n_; ++a) low = std::min(low, value_[a] + suffix_[a][next]);
        return -std::max<Score>(0, *std::max_element(value_.begin(), value_.end()) - low);
      }
      case Objective::kMaxFrontierPartner: {
        std::optional<Score> ub;
        for (std::size_t r = 0; r < 2; ++r) {
          if (!meets(value_[1 - r] + suffix_[1 - r][next])) continue;
          ub = std::max(ub.value_or(std::numeric_limits<Score>::min()), value_[r] + suffix_[r][next]);
        }
        return ub;
      }
    }
    return std::nullopt;
  }

  bool pieces_feasible() const {
    std::size_t total = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      const std::size_t at_least = dead_[a] + (comps_[a] > dead_[a] ? 1 : 0);
      if (!cfg_.piece_budget && at_least > 1) return false;
      total += at_least;
    }
    return !cfg_.piece_budget || total <= *cfg_.piece_budget;
  }

  void search(std::size_t c) {
    if (++states_ > cfg_.max_states) {
      throw Error(ErrorKind::kBudgetExceeded, "grid search exceeded " + std::to_string(cfg_.max_states) + " states");
    }
    const std::optional<Score> ub = bound(c);
    if (!ub || (have_best_ && *ub <= best_)) return;
    if (c == cells_) {
      // Every component is closed now, so the bound is the exact score.
      best_ = *ub;
      have_best_ = true;
      best_owner_ = owner_;
      return;
    }
    const std::size_t ends[2] = {left_[c], right_[c]};
    for (std::size_t a = 0; a < n_; ++a) {
      const std::vector<std::size_t> saved_comps = comps_, saved_dead = dead_;
      std::vector<Union> unions;
      owner_[c] = a;
      parent_[c] = c;
      size_[c] = 1;
      max_last_[c] = std::max(last_touch_[ends[0]], last_touch_[ends[1]]);
      ++comps_[a];
      value_[a] += cell_value_[a][c];
      for (std::size_t p : ends) {
        for (std::size_t x : at_point_[p]) {
          if (owner_[x] != a) continue;
          std::size_t r1 = find(c), r2 = find(x);
          if (r1 == r2) continue;
          if (size_[r1] < size_[r2]) std::swap(r1, r2);
          unions.push_back({r2, r1, max_last_[r1]});
          parent_[r2] = r1;
          size_[r1] += size_[r2];
          max_last_[r1] = std::max(max_last_[r1], max_last_[r2]);
          --comps_[a];
        }
      }
      for (std::size_t p : ends) at_point_[p].push_back(c);
      std::vector<std::size_t> closed;
      for (std::size_t p : ends) {
        for (std::size_t x : at_point_[p]) {
          const std::size_t r = find(x);
          if (max_last_[r] != c || std::find(closed.begin(), closed.end(), r) != closed.end()) continue;
          closed.push_back(r);
          ++dead_[owner_[r]];
        }
      }

      if (pieces_feasible()) search(c + 1);

      for (std::size_t p : ends) at_point_[p].pop_back();
      for (auto it = unions.rbegin(); it != unions.rend(); ++it) {
        parent_[it->child] = it->child;
        size_[it->root] -= size_[it->child];
        max_last_[it->root] = it->old_max;
      }
      value_[a] -= cell_value_[a][c];
      comps_ = saved_comps;
      dead_ = saved_dead;
    }
  }

  const Instance& inst_;
  const GridSearchConfig& cfg_;
  std::size_t n_ = 0, d_ = 0, cells_ = 0;
  std::vector<std::size_t> left_, right_, last_touch_;
  mpz_class scale_;
  std::vector<std::vector<Score>> cell_value_, suffix_;
  Score threshold_ = 0;

  std::vector<std::size_t> parent_, size_, max_last_, owner_;
  std::vector<std::vector<std::size_t>> at_point_;
  std::vector<Score> value_;
  std::vector<std::size_t> comps_, dead_;

  std::uint64_t states_ = 0;
  bool have_best_ = false;
  Score best_ = 0;
  std::vector<std::size_t> best_owner_;
};

}  // namespace

GridSearchResult grid_search_best(const Instance& inst, const GridSearchConfig& cfg) {
  validate_instance(inst);
  if (cfg.grid < 1) throw Error(ErrorKind::kBadParameters, "grid denominator must be at least 1");
  if (cfg.objective == Objective::kMaxFrontierPartner && inst.agent_count() != 2) {
    throw Error(ErrorKind::kBadParameters, "the frontier objective needs exactly two agents");
  }
  if (cfg.piece_budget && *cfg.piece_budget < 1) throw Error(ErrorKind::kBadParameters, "piece budget must be positive");
  if (cfg.objective == Objective::kMinInequity && !cfg.require_complete) {
    GridSearchResult empty;
    empty.optimum = 0;
    empty.witness.pieces.assign(inst.agent_count(), Piece());
    return empty;
  }
  GridSearch search(inst, cfg);
  return search.run();
}

PowersOfThreeCheck check_powers_of_three(int t, int a_lo, int a_hi) {
  if (t < 1 || t > 6) throw Error(ErrorKind::kBudgetExceeded, "t must be in 1..6");
  if (a_lo > a_hi || a_hi - a_lo + 1 > 10) throw Error(ErrorKind::kBudgetExceeded, "exponent window must hold 1..10 values");
  if (a_lo < -30 || a_hi > 30) throw Error(ErrorKind::kBudgetExceeded, "exponents must stay within -30..30");

  // Work in units of 3^-shift so every term is an integer.
  using Big = __int128;
  const int shift = std::max(0, -a_lo);
  auto pow3 = [](int e) {
    Big r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
  };
  const Big half_twice = pow3(shift);  // 2 * (1/2) in the scaled units
  const int coefficients[4] = {-2, -1, 1, 2};
  std::vector<std::pair<int, Big>> options;
  for (int a = a_lo; a <= a_hi; ++a) {
    for (int c : coefficients) options.emplace_back(c, c * pow3(a + shift));
  }

  PowersOfThreeCheck out;
  Big best = -1;
  std::vector<std::size_t> chosen(t), best_choice;
  auto recurse = [&](auto&& self, int depth, std::size_t from, Big sum) -> void {
    if (depth == t) {
      ++out.combinations;
      Big gap = 2 * sum - half_twice;
      if (gap < 0) gap = -gap;
      if (best < 0 || gap < best) {
        best = gap;
        best_choice = chosen;
      }
      return;
    }
    for (std::size_t o = from; o < options.size(); ++o) {
      chosen[depth] = o;
      self(self, depth + 1, o, sum + options[o].second);
    }
  };
  recurse(recurse, 0, 0, 0);

  // gap / (2 * 3^shift) >= 1 / (2 * 3^t)  <=>  gap * 3^t >= 3^shift
  out.holds = best * pow3(t) >= pow3(shift);
  auto to_mpz = [](Big v) {
    mpz_class r = 0;
    const bool negative = v < 0;
    if (negative) v = -v;
    mpz_class place = 1;
    while (v > 0) {
      r += place * static_cast<unsigned long>(v % 1000000000);
      place *= 1000000000;
      v /= 1000000000;
    }
    return negative ? mpz_class(-r) : r;
  };
  out.min_gap = Rational(to_mpz(best), to_mpz(2 * pow3(shift)));
  out.min_gap.canonicalize();
  for (std::size_t o : best_choice) out.minimizer.emplace_back(options[o].first, a_lo + static_cast<int>(o / 4));
  return out;
}

}  // namespace graphcake
