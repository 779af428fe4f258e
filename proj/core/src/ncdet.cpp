#include "qdrazin/ncdet.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "qdrazin/errors.hpp"

namespace qdrazin {
namespace {

void require_square_within_cap(const QMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionMismatch(std::string(op) + " needs a square matrix, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (a.rows() > kMaxDeterminantSize) {
    throw SizeCapExceeded(std::string(op) + ": order " + std::to_string(a.rows()) +
                          " exceeds the cap of " + std::to_string(kMaxDeterminantSize));
  }
}

void require_hermitian(const QMatrix& a, const char* op) {
  if (!is_hermitian(a)) throw NotHermitian(std::string(op) + " needs a Hermitian matrix");
}

void require_anchor(const QMatrix& a, std::size_t anchor, const char* op) {
  if (anchor < 1 || anchor > a.rows()) {
    throw IndexOutOfRange(std::string(op) + ": anchor " + std::to_string(anchor) +
                          " outside 1.." + std::to_string(a.rows()));
  }
}

// Quaternion with int64 components. Every operation is overflow-checked and
// throws Overflow, upon which the caller retries with GMP integers.
__extension__ typedef __int128 Wide;

struct SmallQuat {
  struct Overflow {};

  std::array<std::int64_t, 4> c{};

  static std::int64_t narrow(Wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
      throw Overflow{};
    }
    return static_cast<std::int64_t>(v);
  }

  [[nodiscard]] bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

  friend SmallQuat operator*(const SmallQuat& p, const SmallQuat& q) {
    using W = Wide;
    const auto& a = p.c;
    const auto& b = q.c;
    return {{narrow(W{a[0]} * b[0] - W{a[1]} * b[1] - W{a[2]} * b[2] - W{a[3]} * b[3]),
             narrow(W{a[0]} * b[1] + W{a[1]} * b[0] + W{a[2]} * b[3] - W{a[3]} * b[2]),
             narrow(W{a[0]} * b[2] - W{a[1]} * b[3] + W{a[2]} * b[0] + W{a[3]} * b[1]),
             narrow(W{a[0]} * b[3] + W{a[1]} * b[2] - W{a[2]} * b[1] + W{a[3]} * b[0])}};
  }
  void add(const SmallQuat& q, bool negate) {
    for (std::size_t t = 0; t < 4; ++t) {
      c[t] = narrow(negate ? Wide{c[t]} - q.c[t] : Wide{c[t]} + q.c[t]);
    }
  }
  [[nodiscard]] mpz_class component(std::size_t t) const {
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return mpz_class(static_cast<long>(c[t]));
  }
};

// Quaternion with arbitrary-precision integer components.
struct BigQuat {
  std::array<mpz_class, 4> c{};

  [[nodiscard]] bool is_zero() const {
    return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[3]) == 0;
  }

  friend BigQuat operator*(const BigQuat& p, const BigQuat& q) {
    const auto& a = p.c;
    const auto& b = q.c;
    return {{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
             a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
             a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
             a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]}};
  }
  void add(const BigQuat& q, bool negate) {
    for (std::size_t t = 0; t < 4; ++t) {
      if (negate) {
        c[t] -= q.c[t];
      } else {
        c[t] += q.c[t];
      }
    }
  }
  [[nodiscard]] const mpz_class& component(std::size_t t) const { return c[t]; }
};

// Matrix entries scaled by the lcm of their denominators, so that
// det(scale * A) = scale^n det(A) is computed in integer arithmetic.
struct IntegerImage {
  mpz_class scale;
  std::vector<std::array<mpz_class, 4>> entries;  // row-major, 0-based
  bool fits_small = true;
};

IntegerImage integer_image(const QMatrix& a) {
  IntegerImage out;
  out.scale = 1;
  for (const Quaternion& q : a.entries()) {
    for (std::size_t t = 0; t < 4; ++t) {
      mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), q[t].raw().get_den_mpz_t());
    }
  }
  out.entries.reserve(a.entries().size());
  for (const Quaternion& q : a.entries()) {
    std::array<mpz_class, 4> e;
    for (std::size_t t = 0; t < 4; ++t) {
      e[t] = q[t].raw().get_num() * (out.scale / q[t].raw().get_den());
      if (!e[t].fits_slong_p()) out.fits_small = false;
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

// Enumerates every permutation directly in ordered cycle notation by depth
// first search. A path through the tree fixes the permutation one factor at
// a time, so the partial product is shared by all permutations with the same
// prefix and a zero factor prunes its whole subtree.
//
// State: the current cycle is led by `leader` and has reached `cur`. The next
// step either closes the cycle (factor a[cur, leader]) or extends it to an
// unused index. After closing, the next cycle is led by the smallest unused
// index, which makes the notation canonical.
template <typename Q>
class CycleEnumerator {
 public:
  CycleEnumerator(std::vector<Q> entries, std::size_t n, CycleOrientation orientation)
      : a_(std::move(entries)), n_(n), orientation_(orientation), used_(n_ + 1, false) {}

  Q run(std::size_t anchor, const Q& one) {
    used_[anchor] = true;
    visit(anchor, anchor, one, 0, n_ - 1);
    return std::move(sum_);
  }

 private:
  // Factor for the step cur -> next, in orientation-specific index order.
  const Q& factor(std::size_t cur, std::size_t next) const {
    return orientation_ == CycleOrientation::kLeftOrdered ? a_[(cur - 1) * n_ + (next - 1)]
                                                          : a_[(next - 1) * n_ + (cur - 1)];
  }

  Q extend(const Q& prod, const Q& f) const {
    return orientation_ == CycleOrientation::kLeftOrdered ? prod * f : f * prod;
  }

  void visit(std::size_t leader, std::size_t cur, const Q& prod, std::size_t closed,
             std::size_t unused) {
    // Close the current cycle.
    if (const Q& f = factor(cur, leader); !f.is_zero()) {
      Q next_prod = extend(prod, f);
      if (unused == 0) {
        // r = closed + 1 cycles; sign (-1)^(n - r).
        sum_.add(next_prod, (n_ - (closed + 1)) % 2 == 1);
      } else {
        std::size_t next_leader = 1;
        while (used_[next_leader]) ++next_leader;
        used_[next_leader] = true;
        visit(next_leader, next_leader, next_prod, closed + 1, unused - 1);
        used_[next_leader] = false;
      }
    }
    // Extend the current cycle by an unused index.
    if (unused == 0) return;
    for (std::size_t next = 1; next <= n_; ++next) {
      if (used_[next]) continue;
      const Q& f = factor(cur, next);
      if (f.is_zero()) continue;
      used_[next] = true;
      visit(leader, next, extend(prod, f), closed, unused - 1);
      used_[next] = false;
    }
  }

  std::vector<Q> a_;
  std::size_t n_;
  CycleOrientation orientation_;
  std::vector<bool> used_;
  Q sum_{};
};

template <typename Q>
Quaternion to_quaternion(const Q& q, const mpz_class& denominator) {
  std::array<Rational, 4> c;
  for (std::size_t t = 0; t < 4; ++t) {
    c[t] = Rational::from_mpq(mpq_class(mpz_class(q.component(t)), denominator));
  }
  return {c[0], c[1], c[2], c[3]};
}

Quaternion anchored_determinant(const QMatrix& a, std::size_t anchor,
                                CycleOrientation orientation, const char* op) {
  require_square_within_cap(a, op);
  require_anchor(a, anchor, op);
  const std::size_t n = a.rows();
  const IntegerImage image = integer_image(a);
  mpz_class denominator;
  mpz_pow_ui(denominator.get_mpz_t(), image.scale.get_mpz_t(), n);

  if (image.fits_small) {
    std::vector<SmallQuat> entries;
    entries.reserve(image.entries.size());
    for (const auto& e : image.entries) {
      entries.push_back({{e[0].get_si(), e[1].get_si(), e[2].get_si(), e[3].get_si()}});
    }
    try {
      const SmallQuat d = CycleEnumerator<SmallQuat>(std::move(entries), n, orientation)
                              .run(anchor, SmallQuat{{1, 0, 0, 0}});
      return to_quaternion(d, denominator);
    } catch (const SmallQuat::Overflow&) {
      // Fall through to arbitrary precision.
    }
  }
  std::vector<BigQuat> entries;
  entries.reserve(image.entries.size());
  for (const auto& e : image.entries) entries.push_back({e});
  const BigQuat d = CycleEnumerator<BigQuat>(std::move(entries), n, orientation)
                        .run(anchor, BigQuat{{1, 0, 0, 0}});
  return to_quaternion(d, denominator);
}

}  // namespace

OrderedCycleDecomposition ordered_cycles(const std::vector<std::size_t>& permutation,
                                         std::size_t anchor, CycleOrientation orientation) {
  const std::size_t n = permutation.size();
  if (anchor < 1 || anchor > n) throw IndexOutOfRange("anchor outside permutation domain");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t image : permutation) {
    if (image < 1 || image > n || seen[image]) throw InvalidOrder("not a permutation");
    seen[image] = true;
  }
  std::fill(seen.begin(), seen.end(), false);

  OrderedCycleDecomposition out;
  out.orientation = orientation;
  auto take_cycle = [&](std::size_t leader) {
    std::vector<std::size_t> cycle;
    for (std::size_t x = leader; !seen[x]; x = permutation[x - 1]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.cycles.push_back(std::move(cycle));
  };
  take_cycle(anchor);
  for (std::size_t x = 1; x <= n; ++x) {
    if (!seen[x]) take_cycle(x);
  }
  out.sign_exponent = n - out.cycles.size();
  return out;
}

Quaternion cycle_term(const QMatrix& a, const OrderedCycleDecomposition& decomposition) {
  Quaternion prod(1);
  const bool left = decomposition.orientation == CycleOrientation::kLeftOrdered;
  for (const auto& cycle : decomposition.cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const std::size_t cur = cycle[t];
      const std::size_t next = cycle[(t + 1) % cycle.size()];
      if (left) {
        prod = prod * a(cur, next);
      } else {
        prod = a(next, cur) * prod;
      }
    }
  }
  return decomposition.sign_exponent % 2 == 0 ? prod : -prod;
}

Quaternion rdet(const QMatrix& a, std::size_t i) {
  return anchored_determinant(a, i, CycleOrientation::kLeftOrdered, "rdet");
}

Quaternion cdet(const QMatrix& a, std::size_t j) {
  return anchored_determinant(a, j, CycleOrientation::kRightOrdered, "cdet");
}

Rational hdet(const QMatrix& a) {
  require_square_within_cap(a, "hdet");
  require_hermitian(a, "hdet");
  Quaternion d = rdet(a, 1);
  if (!d.is_real()) {
    throw InternalInconsistency("row determinant of a Hermitian matrix is not real: " +
                                d.to_string());
  }
  return d.real();
}

Quaternion cofactor_right(const QMatrix& a, std::size_t i, std::size_t j) {
  if (!a.is_square()) throw DimensionMismatch("cofactor of a non-square matrix");
  require_anchor(a, i, "cofactor_right");
  require_anchor(a, j, "cofactor_right");
  if (a.rows() == 1) return Quaternion(1);
  if (i == j) return rdet(delete_row_col(a, i, i), 1);
  // Column j takes a copy of column i, then row and column i are removed.
  const QMatrix bordered = delete_row_col(replace_column(a, j, a.column_at(i)), i, i);
  return -rdet(bordered, j < i ? j : j - 1);
}

Quaternion cofactor_left(const QMatrix& a, std::size_t i, std::size_t j) {
  if (!a.is_square()) throw DimensionMismatch("cofactor of a non-square matrix");
  require_anchor(a, i, "cofactor_left");
  require_anchor(a, j, "cofactor_left");
  if (a.rows() == 1) return Quaternion(1);
  if (i == j) return cdet(delete_row_col(a, j, j), 1);
  // Row i takes a copy of row j, then row and column j are removed.
  const QMatrix bordered = delete_row_col(replace_row(a, i, a.row_at(j)), j, j);
  return -cdet(bordered, i < j ? i : i - 1);
}

Rational principal_minor_sum(const QMatrix& a, std::size_t order,
                             std::optional<std::size_t> anchor) {
  require_hermitian(a, "principal_minor_sum");
  if (order == 0) return anchor ? Rational(0) : Rational(1);
  Rational sum;
  for (const IndexSet& beta : enumerate_index_sets(a.rows(), order, anchor)) {
    sum += hdet(principal_submatrix(a, beta));
  }
  return sum;
}

std::vector<Rational> char_coeffs(const QMatrix& a) {
  require_square_within_cap(a, "char_coeffs");
  require_hermitian(a, "char_coeffs");
  std::vector<Rational> out;
  out.reserve(a.rows());
  for (std::size_t s = 1; s <= a.rows(); ++s) out.push_back(principal_minor_sum(a, s));
  return out;
}

std::size_t rank_pm(const QMatrix& a) {
  require_square_within_cap(a, "rank_pm");
  require_hermitian(a, "rank_pm");
  for (std::size_t s = a.rows(); s >= 1; --s) {
    for (const IndexSet& beta : enumerate_index_sets(a.rows(), s)) {
      if (!hdet(principal_submatrix(a, beta)).is_zero()) return s;
    }
  }
  return 0;
}

QMatrix herm_inverse(const QMatrix& a) {
  require_square_within_cap(a, "herm_inverse");
  require_hermitian(a, "herm_inverse");
  const Rational det = hdet(a);
  if (det.is_zero()) throw Singular("Hermitian matrix has zero determinant");
  const Rational scale = reciprocal(det);
  const std::size_t n = a.rows();

  std::vector<Quaternion> right(n * n);
  std::vector<Quaternion> left(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      right[(i - 1) * n + (j - 1)] = cofactor_right(a, j, i) * scale;
      left[(i - 1) * n + (j - 1)] = cofactor_left(a, j, i) * scale;
    }
  }
  QMatrix inv(n, n, std::move(right));
  if (inv != QMatrix(n, n, std::move(left))) {
    throw InternalInconsistency("right and left cofactor inverses differ");
  }
  const QMatrix id = QMatrix::identity(n);
  if (mat_mul(a, inv) != id || mat_mul(inv, a) != id) {
    throw InternalInconsistency("cofactor inverse does not invert the matrix");
  }
  return inv;
}

}  // namespace qdrazin
