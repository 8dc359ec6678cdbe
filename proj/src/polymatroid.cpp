#include "matroid_forge/polymatroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "matroid_forge/errors.hpp"

namespace matroid_forge::poly {

namespace {

Rational weight(std::span<const Rational> x, Mask a) {
  Rational total = 0;
  for (std::size_t e = 0; a != 0; ++e, a >>= 1) {
    if (a & 1U) total += x[e];
  }
  return total;
}

void check_length(std::span<const Rational> x, const SetFunction& f) {
  if (x.size() != f.ground_size()) throw InputError("vector length does not match the ground set");
}

std::size_t popcount(Mask a) { return static_cast<std::size_t>(__builtin_popcountll(a)); }

}  // namespace

SetFunction::SetFunction(std::size_t ground_size, const std::function<Rational(Mask)>& evaluate) : n_(ground_size) {
  if (n_ > kMaxGround) {
    throw BoundExceeded("set function ground set of " + std::to_string(n_) + " exceeds " + std::to_string(kMaxGround));
  }
  table_.reserve(std::size_t{1} << n_);
  for (Mask a = 0; a <= full(); ++a) table_.push_back(evaluate(a));
}

bool SetFunction::is_normalized() const { return sgn(table_[0]) == 0; }

bool SetFunction::is_nondecreasing() const {
  for (Mask a = 0; a <= full(); ++a) {
    for (std::size_t e = 0; e < n_; ++e) {
      if (!(a >> e & 1U) && table_[a | Mask{1} << e] < table_[a]) return false;
    }
  }
  return true;
}

// Diminishing returns form: f(A+i) - f(A) >= f(A+i+j) - f(A+j).
bool SetFunction::is_submodular() const {
  for (Mask a = 0; a <= full(); ++a) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (a >> i & 1U) continue;
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (a >> j & 1U) continue;
        const Mask ai = a | Mask{1} << i;
        const Mask aj = a | Mask{1} << j;
        if (table_[ai] + table_[aj] < table_[ai | aj] + table_[a]) return false;
      }
    }
  }
  return true;
}

bool SetFunction::is_supermodular() const {
  SetFunction negated(n_, [this](Mask a) { return Rational(-table_[a]); });
  return negated.is_submodular();
}

SetFunction graphic_rank(const WeightedMultigraph& g) {
  return SetFunction(g.num_edges(), [&g](Mask a) { return Rational(static_cast<unsigned long>(rank_of_mask(g, a))); });
}

SetFunction dual_supermodular(const SetFunction& f) {
  return SetFunction(f.ground_size(), [&f](Mask a) { return Rational(f(f.full()) - f(f.full() & ~a)); });
}

SetFunction translated(const SetFunction& f, const Rational& c) {
  return SetFunction(f.ground_size(), [&f, &c](Mask a) {
    return Rational(-f(f.full()) + f(f.full() & ~a) + c * static_cast<unsigned long>(popcount(a)));
  });
}

bool membership(std::span<const Rational> x, const Rational& h, Region region, const SetFunction& f) {
  check_length(x, f);
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  const Mask full = f.full();
  const bool lower = region == Region::Q || region == Region::C;
  for (Mask a = 1; a <= full; ++a) {
    const Rational xa = weight(x, a);
    if (lower) {
      const Rational ga = f(full) - f(full & ~a);
      if (xa < h * ga) return false;
    } else if (xa > h * f(a)) {
      return false;
    }
  }
  if (region == Region::B || region == Region::C) return weight(x, full) == h * f(full);
  return true;
}

bool in_capped_contrapolymatroid(std::span<const Rational> x, const SetFunction& f, const Rational& c, bool face) {
  check_length(x, f);
  for (const auto& v : x) {
    if (v > c) return false;
  }
  return membership(x, 1, face ? Region::C : Region::Q, f);
}

Levels alpha_beta(std::span<const Rational> x, const SetFunction& f) {
  check_length(x, f);
  const Mask full = f.full();
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  for (Mask a = 1; a <= full; ++a) {
    const Rational xa = weight(x, a);
    if (sgn(f(a)) > 0) {
      Rational r = xa / f(a);
      if (!alpha || r > *alpha) alpha = std::move(r);
    } else if (sgn(xa) > 0) {
      throw InputError("alpha_beta: x is positive on a set where f vanishes");
    }
    const Rational ga = f(full) - f(full & ~a);
    if (sgn(ga) > 0) {
      Rational r = xa / ga;
      if (!beta || r < *beta) beta = std::move(r);
    }
  }
  if (!alpha || !beta) throw InputError("alpha_beta: f vanishes on the whole ground set");
  return Levels{*alpha, *beta};
}

Vector p_basis(std::span<const Rational> x, const SetFunction& f, std::span<const std::size_t> order) {
  check_length(x, f);
  Vector y(f.ground_size(), Rational(0));
  for (auto j : order) {
    // Largest eps with y + eps 1_j in P_f, capped by x_j - y_j.
    Rational eps = x[j] - y[j];
    for (Mask a = 1; a <= f.full(); ++a) {
      if (!(a >> j & 1U)) continue;
      const Rational slack = f(a) - weight(y, a);
      if (slack < eps) eps = slack;
    }
    if (sgn(eps) > 0) y[j] += eps;
  }
  return y;
}

Vector p_basis(std::span<const Rational> x, const SetFunction& f) {
  std::vector<std::size_t> order(f.ground_size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return p_basis(x, f, order);
}

std::vector<std::size_t> cost_order(std::span<const Rational> m) {
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m[a] < m[b]; });
  return order;
}

Vector greedy_min_cost_base(std::span<const Rational> x, std::span<const Rational> m, const SetFunction& f) {
  check_length(m, f);
  const auto order = cost_order(m);
  return p_basis(x, f, order);
}

Vector generic_reinforce_at(std::span<const Rational> s, std::span<const Rational> m, const SetFunction& f,
                            const Rational& h) {
  check_length(s, f);
  check_length(m, f);
  Vector z(f.ground_size(), Rational(0));
  Vector current(s.begin(), s.end());
  for (auto j : cost_order(m)) {
    std::optional<Rational> eps;
    for (Mask a = 1; a <= f.full(); ++a) {
      if (!(a >> j & 1U)) continue;
      Rational v = h * f(a) - weight(current, a);
      if (!eps || v < *eps) eps = std::move(v);
    }
    if (sgn(*eps) < 0) throw ConsistencyError("generic_reinforce: s is not in h P_f");
    z[j] += *eps;
    current[j] += *eps;
  }
  return z;
}

Vector generic_sparsify_at(std::span<const Rational> s, std::span<const Rational> m, const SetFunction& f,
                           const Rational& h) {
  check_length(s, f);
  check_length(m, f);
  const Mask full = f.full();
  Vector z(f.ground_size(), Rational(0));
  Vector current(s.begin(), s.end());
  for (auto j : cost_order(m)) {
    std::optional<Rational> eps;
    for (Mask a = 1; a <= full; ++a) {
      if (!(a >> j & 1U)) continue;
      Rational v = weight(current, a) - h * (f(full) - f(full & ~a));
      if (!eps || v < *eps) eps = std::move(v);
    }
    if (sgn(*eps) < 0) throw ConsistencyError("generic_sparsify: s is not in h Q_g");
    z[j] += *eps;
    current[j] -= *eps;
  }
  return z;
}

Vector generic_reinforce(std::span<const Rational> s, std::span<const Rational> m, const SetFunction& f) {
  return generic_reinforce_at(s, m, f, alpha_beta(s, f).alpha);
}

Vector generic_sparsify(std::span<const Rational> s, std::span<const Rational> m, const SetFunction& f) {
  return generic_sparsify_at(s, m, f, alpha_beta(s, f).beta);
}

std::vector<Vector> base_vertices(const SetFunction& f) {
  if (f.ground_size() > 8) throw BoundExceeded("base_vertices: ground set larger than 8");
  std::vector<std::size_t> order(f.ground_size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::set<Vector> seen;
  do {
    // Greedy vertex: y_{o_k} = f({o_1..o_k}) - f({o_1..o_{k-1}}).
    Vector y(f.ground_size(), Rational(0));
    Mask prefix = 0;
    for (auto e : order) {
      const Mask next = prefix | Mask{1} << e;
      y[e] = f(next) - f(prefix);
      prefix = next;
    }
    seen.insert(std::move(y));
  } while (std::next_permutation(order.begin(), order.end()));
  return {seen.begin(), seen.end()};
}

}  // namespace matroid_forge::poly
