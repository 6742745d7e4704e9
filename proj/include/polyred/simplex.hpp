#pragma once

// Exact rational linear programming over free variables.
//
//   optimize  b0 + c·x   subject to  b_i + A_i·x >= 0
//
// Two-phase dictionary simplex with Bland's least-index rule throughout, so
// every run terminates and identical problems pivot identically. Free
// variables are split x = u - w with u, w >= 0 (the textbook dictionary
// form); equations are never accepted here — callers substitute them away
// first.
//
// Witnesses: Optimal carries the optimizer, Unbounded carries a feasible
// point plus an improving ray, Infeasible carries Farkas multipliers
// lambda >= 0 with lambda^T A = 0 and lambda^T b < 0, read off the final
// phase-one objective row.
//
// Homogeneous systems (every constraint b_i = 0, e.g. any generator
// redundancy LP) take a dedicated route: the optimum is 0 or unbounded, and
// boundedness is decided by one feasibility LP with the normalization row
// c·x <= -1. That run starts at a nondegenerate dictionary instead of the
// fully tight cone apex, which Bland's rule alone handles poorly.

#include <polyred/check.hpp>
#include <polyred/row.hpp>

#include <atomic>
#include <cstdint>
#include <utility>
#include <vector>

namespace polyred {

enum class Sense { Min, Max };
enum class LPStatus { Optimal, Unbounded, Infeasible };

struct LPProblem {
  Sense sense = Sense::Min;
  Row objective;                // b = constant term of the objective
  std::vector<Row> constraints; // each b + a·x >= 0
  int dim = 0;

  void validate() const {
    internal_check(dim >= 1, "LPProblem: dimension must be at least 1");
    internal_check(objective.dim() == dim, "LPProblem: objective dimension mismatch");
    for (auto const& r : constraints)
      internal_check(r.dim() == dim, "LPProblem: constraint dimension mismatch");
  }
};

struct LPOutcome {
  LPStatus status = LPStatus::Optimal;
  Rational value;                     // meaningful iff Optimal
  std::vector<Rational> point;        // Optimal: optimizer; Unbounded: feasible base point
  std::vector<Rational> direction;    // iff Unbounded: improving ray
  std::vector<Rational> farkas;       // iff Infeasible: one multiplier per constraint
};

struct LPStats {
  std::atomic<std::int64_t> solves{0};
  std::atomic<std::int64_t> pivots{0};
  std::atomic<std::int64_t> max_rows{0};

  void record_solve(std::size_t rows) {
    solves.fetch_add(1, std::memory_order_relaxed);
    std::int64_t r = static_cast<std::int64_t>(rows);
    std::int64_t seen = max_rows.load(std::memory_order_relaxed);
    while (seen < r && !max_rows.compare_exchange_weak(seen, r, std::memory_order_relaxed)) {
    }
  }
  void record_pivots(std::int64_t n) { pivots.fetch_add(n, std::memory_order_relaxed); }
};

namespace detail {

// Dictionary over variable ids: u_j = j, w_j = d + j, slack_i = 2d + i,
// phase-one auxiliary = 2d + m. Row i reads  basic[i] = T[i][0] + sum_k
// T[i][k+1] * nonbasic[k]; obj rows use the same layout.
class Dictionary {
 public:
  Dictionary(Row const& objective, std::vector<Row> const& cons, int dim)
      : d_(dim), m_(static_cast<int>(cons.size())), aux_id_(2 * dim + m_) {
    cols_.reserve(2 * static_cast<std::size_t>(d_) + 1);
    for (int j = 0; j < 2 * d_; ++j) cols_.push_back(j);
    basic_.reserve(m_);
    T_.reserve(m_);
    for (int i = 0; i < m_; ++i) {
      basic_.push_back(2 * d_ + i);
      std::vector<Rational> row(cols_.size() + 1);
      row[0] = cons[i].b;
      for (int j = 0; j < d_; ++j) {
        row[1 + j] = cons[i].a[j];
        row[1 + d_ + j] = -cons[i].a[j];
      }
      T_.push_back(std::move(row));
    }
    obj_.assign(cols_.size() + 1, Rational(0));
    obj_[0] = objective.b;
    for (int j = 0; j < d_; ++j) {
      obj_[1 + j] = objective.a[j];
      obj_[1 + d_ + j] = -objective.a[j];
    }
  }

  std::int64_t pivot_count() const { return pivots_; }

  // Returns true when a feasible dictionary was reached; false means
  // infeasible and `farkas` holds the phase-one multipliers.
  bool phase_one(std::vector<Rational>& farkas) {
    int worst = -1;
    for (int i = 0; i < m_; ++i)
      if (T_[i][0] < 0 && (worst < 0 || T_[i][0] < T_[worst][0] ||
                           (T_[i][0] == T_[worst][0] && basic_[i] < basic_[worst])))
        worst = i;
    if (worst < 0) return true;

    // Install the auxiliary column (coefficient +1 in every row) and its
    // objective, then make the dictionary feasible with one special pivot.
    for (auto& row : T_) row.push_back(Rational(1));
    obj_.push_back(Rational(0));
    phase1_.assign(obj_.size(), Rational(0));
    phase1_.back() = 1;
    cols_.push_back(aux_id_);
    aux_live_ = true;

    pivot(worst, static_cast<int>(cols_.size()) - 1);

    while (true) {
      int enter = entering(phase1_);
      if (enter < 0) break;
      int leave = ratio_row(enter);
      internal_check(leave >= 0, "phase one objective is bounded by zero");
      pivot(leave, enter);
    }

    if (phase1_[0] > 0) {
      farkas.assign(m_, Rational(0));
      for (std::size_t k = 0; k < cols_.size(); ++k) {
        int v = cols_[k];
        if (v >= 2 * d_ && v < 2 * d_ + m_) farkas[v - 2 * d_] = phase1_[k + 1];
      }
      return false;
    }

    // Optimum zero: drive the auxiliary variable out of the dictionary.
    int aux_row = -1;
    for (int i = 0; i < m_; ++i)
      if (basic_[i] == aux_id_) aux_row = i;
    if (aux_row >= 0) {
      internal_check(T_[aux_row][0] == 0, "auxiliary variable must sit at zero");
      int enter = -1, enter_id = -1;
      for (std::size_t k = 0; k < cols_.size(); ++k)
        if (T_[aux_row][k + 1] != 0 && (enter < 0 || cols_[k] < enter_id)) {
          enter = static_cast<int>(k);
          enter_id = cols_[k];
        }
      if (enter >= 0) {
        pivot(aux_row, enter);  // degenerate: no basic value moves
      } else {
        drop_row(aux_row);
      }
    }
    drop_aux_column();
    return true;
  }

  // Pre: dictionary feasible. Returns Optimal or Unbounded pieces.
  LPStatus phase_two() {
    while (true) {
      int enter = entering(obj_);
      if (enter < 0) return LPStatus::Optimal;
      int leave = ratio_row(enter);
      if (leave < 0) {
        unbounded_col_ = enter;
        return LPStatus::Unbounded;
      }
      pivot(leave, enter);
    }
  }

  Rational objective_value() const { return obj_[0]; }

  std::vector<Rational> point() const {
    std::vector<Rational> x(d_);
    for (int j = 0; j < d_; ++j) x[j] = var_value(j) - var_value(d_ + j);
    return x;
  }

  std::vector<Rational> ray() const {
    internal_check(unbounded_col_ >= 0, "ray requested without unbounded column");
    std::vector<Rational> dir(d_);
    for (int j = 0; j < d_; ++j) dir[j] = var_rate(j) - var_rate(d_ + j);
    return dir;
  }

 private:
  int entering(std::vector<Rational> const& objrow) const {
    int best = -1, best_id = -1;
    for (std::size_t k = 0; k < cols_.size(); ++k)
      if (objrow[k + 1] < 0 && (best < 0 || cols_[k] < best_id)) {
        best = static_cast<int>(k);
        best_id = cols_[k];
      }
    return best;
  }

  // Smallest nonnegative bound on the entering variable; -1 when none.
  int ratio_row(int enter) const {
    int best = -1;
    Rational best_ratio;
    for (int i = 0; i < m_; ++i) {
      Rational const& c = T_[i][enter + 1];
      if (c >= 0) continue;
      Rational ratio = -T_[i][0] / c;
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basic_[i] < basic_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(int r, int k) {
    ++pivots_;
    std::vector<Rational>& pr = T_[r];
    Rational piv = pr[k + 1];
    internal_check(piv != 0, "pivot on zero coefficient");

    // Solve row r for the entering variable; the leaving one takes slot k.
    Rational inv = Rational(1) / piv;
    pr[k + 1] = -1;
    for (auto& v : pr) v *= -inv;

    auto apply = [&](std::vector<Rational>& row) {
      Rational c = row[k + 1];
      if (c == 0) return;
      row[k + 1] = 0;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (pr[j] != 0) row[j] += c * pr[j];
    };
    for (int i = 0; i < m_; ++i)
      if (i != r) apply(T_[i]);
    apply(obj_);
    if (!phase1_.empty()) apply(phase1_);

    std::swap(basic_[r], cols_[k]);
  }

  void drop_row(int r) {
    T_.erase(T_.begin() + r);
    basic_.erase(basic_.begin() + r);
    --m_;
  }

  void drop_aux_column() {
    if (!aux_live_) return;
    int k = -1;
    for (std::size_t i = 0; i < cols_.size(); ++i)
      if (cols_[i] == aux_id_) k = static_cast<int>(i);
    internal_check(k >= 0, "auxiliary column must be nonbasic before removal");
    cols_.erase(cols_.begin() + k);
    for (auto& row : T_) row.erase(row.begin() + k + 1);
    obj_.erase(obj_.begin() + k + 1);
    phase1_.clear();
    aux_live_ = false;
  }

  Rational var_value(int id) const {
    for (int i = 0; i < m_; ++i)
      if (basic_[i] == id) return T_[i][0];
    return Rational(0);
  }

  Rational var_rate(int id) const {
    if (id == cols_[static_cast<std::size_t>(unbounded_col_)]) return Rational(1);
    for (int i = 0; i < m_; ++i)
      if (basic_[i] == id) return T_[i][unbounded_col_ + 1];
    return Rational(0);
  }

  int d_, m_, aux_id_;
  bool aux_live_ = false;
  int unbounded_col_ = -1;
  std::int64_t pivots_ = 0;
  std::vector<int> cols_, basic_;
  std::vector<std::vector<Rational>> T_;
  std::vector<Rational> obj_, phase1_;
};

inline LPOutcome solve_min(Row const& objective, std::vector<Row> const& cons, int dim,
                           LPStats* stats) {
  Dictionary dict(objective, cons, dim);
  LPOutcome out;
  std::vector<Rational> farkas;
  if (!dict.phase_one(farkas)) {
    out.status = LPStatus::Infeasible;
    out.farkas = std::move(farkas);
  } else if (dict.phase_two() == LPStatus::Unbounded) {
    out.status = LPStatus::Unbounded;
    out.point = dict.point();
    out.direction = dict.ray();
  } else {
    out.status = LPStatus::Optimal;
    out.value = dict.objective_value();
    out.point = dict.point();
  }
  if (stats) stats->record_pivots(dict.pivot_count());
  return out;
}

}  // namespace detail

inline LPOutcome solve(LPProblem const& p, LPStats* stats = nullptr) {
  p.validate();
  if (stats) stats->record_solve(p.constraints.size());

  // Normalize to minimization.
  Row obj = p.objective;
  bool const maximize = p.sense == Sense::Max;
  if (maximize) obj = scaled(std::move(obj), Rational(-1));

  bool homogeneous = true;
  for (auto const& r : p.constraints)
    if (r.b != 0) {
      homogeneous = false;
      break;
    }

  LPOutcome out;
  if (homogeneous) {
    // Feasible cone containing the origin: the minimum is 0 there unless the
    // objective is unbounded along the cone, decided by c·x <= -1.
    if (!obj.coefficients_zero()) {
      std::vector<Row> aux = p.constraints;
      Row norm;
      norm.b = -1;  // -1 - c·x >= 0, i.e. c·x <= -1
      norm.a.resize(p.dim);
      for (int j = 0; j < p.dim; ++j) norm.a[j] = -obj.a[j];
      aux.push_back(std::move(norm));
      Row zero{Rational(0), std::vector<Rational>(p.dim)};
      LPOutcome probe = detail::solve_min(zero, aux, p.dim, stats);
      internal_check(probe.status != LPStatus::Unbounded, "feasibility probe has a constant objective");
      if (probe.status == LPStatus::Optimal) {
        out.status = LPStatus::Unbounded;
        out.point.assign(p.dim, Rational(0));
        out.direction = std::move(probe.point);
        return out;
      }
    }
    out.status = LPStatus::Optimal;
    out.value = maximize ? -obj.b : obj.b;
    out.point.assign(p.dim, Rational(0));
    return out;
  }

  out = detail::solve_min(obj, p.constraints, p.dim, stats);
  if (out.status == LPStatus::Optimal && maximize) out.value = -out.value;
  return out;
}

// Recomputation of the outcome's claims by direct substitution. Optimality
// itself is not re-proved; feasibility, objective value, ray improvement and
// Farkas arithmetic are.
inline bool verify(LPProblem const& p, LPOutcome const& o) {
  auto feasible_at = [&](std::vector<Rational> const& x) {
    if (static_cast<int>(x.size()) != p.dim) return false;
    for (auto const& r : p.constraints)
      if (r.value_at(x) < 0) return false;
    return true;
  };

  switch (o.status) {
    case LPStatus::Optimal:
      return feasible_at(o.point) && p.objective.value_at(o.point) == o.value;
    case LPStatus::Unbounded: {
      if (!feasible_at(o.point)) return false;
      if (static_cast<int>(o.direction.size()) != p.dim) return false;
      for (auto const& r : p.constraints)
        if (r.rate_along(o.direction) < 0) return false;
      Rational drift = p.objective.rate_along(o.direction);
      return p.sense == Sense::Min ? drift < 0 : drift > 0;
    }
    case LPStatus::Infeasible: {
      if (o.farkas.size() != p.constraints.size()) return false;
      Rational bsum = 0;
      std::vector<Rational> asum(p.dim, Rational(0));
      for (std::size_t i = 0; i < o.farkas.size(); ++i) {
        if (o.farkas[i] < 0) return false;
        bsum += o.farkas[i] * p.constraints[i].b;
        for (int j = 0; j < p.dim; ++j) asum[j] += o.farkas[i] * p.constraints[i].a[j];
      }
      for (auto const& c : asum)
        if (c != 0) return false;
      return bsum < 0;
    }
  }
  return false;
}

}  // namespace polyred
