#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace glg {

using BigInt = boost::multiprecision::cpp_int;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GroupKind { Integers, Cyclic, FreeAbelian, Free, Sum, Quotient };

enum class Side { Left, Right };

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows_in, std::size_t ncols) {
    IntMatrix m(rows_in.size(), ncols);
    for (std::size_t i = 0; i < rows_in.size(); ++i) {
      if (rows_in[i].size() != ncols) throw GroupError("ragged matrix");
      for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rows_in[i][j];
    }
    return m;
  }

  BigInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw GroupError("matrix shape mismatch");
    IntMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t k = 0; k < x.cols; ++k) {
        const BigInt& v = x.at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
      }
    return r;
  }
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

inline BigInt determinant(IntMatrix m) {
  if (m.rows != m.cols) throw GroupError("determinant of non-square matrix");
  // Bareiss fraction-free elimination.
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

struct SmithForm {
  IntMatrix U, S, V;  // U * M * V == S
  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(S.rows, S.cols); ++i) d.push_back(S.at(i, i));
    return d;
  }
};

inline SmithForm smith_normal_form(const IntMatrix& M) {
  SmithForm f{IntMatrix::identity(M.rows), M, IntMatrix::identity(M.cols)};
  IntMatrix& S = f.S;
  IntMatrix& U = f.U;
  IntMatrix& V = f.V;
  const std::size_t m = S.rows, n = S.cols;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(S.at(i, c), S.at(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(U.at(i, c), U.at(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(S.at(r, i), S.at(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(V.at(r, i), V.at(r, j));
  };
  // row_dst -= q * row_src
  auto row_sub = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t c = 0; c < n; ++c) S.at(dst, c) -= q * S.at(src, c);
    for (std::size_t c = 0; c < m; ++c) U.at(dst, c) -= q * U.at(src, c);
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t r = 0; r < m; ++r) S.at(r, dst) -= q * S.at(r, src);
    for (std::size_t r = 0; r < n; ++r) V.at(r, dst) -= q * V.at(r, src);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      bool found = false;
      std::size_t bi = 0, bj = 0;
      BigInt best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const BigInt& v = S.at(i, j);
          if (v == 0) continue;
          BigInt av = abs(v);
          if (!found || av < best) {
            found = true;
            best = av;
            bi = i;
            bj = j;
          }
        }
      if (!found) return f;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S.at(i, t) == 0) continue;
        BigInt q = S.at(i, t) / S.at(t, t);
        row_sub(i, t, q);
        if (S.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S.at(t, j) == 0) continue;
        BigInt q = S.at(t, j) / S.at(t, t);
        col_sub(j, t, q);
        if (S.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S.at(i, j) % S.at(t, t) != 0) {
            // pull the offending row into row t and retry
            row_sub(t, i, BigInt(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S.at(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) S.at(t, c) = -S.at(t, c);
      for (std::size_t c = 0; c < m; ++c) U.at(t, c) = -U.at(t, c);
    }
  }
  return f;
}

// Invariant factors of Z^ncols / rowspace(M), in divisibility order, units dropped,
// free part reported as zeros at the end.
inline std::vector<long long> invariant_factors(const IntMatrix& M) {
  SmithForm f = smith_normal_form(M);
  std::vector<long long> out;
  for (std::size_t i = 0; i < M.cols; ++i) {
    BigInt d = i < std::min(M.rows, M.cols) ? f.S.at(i, i) : BigInt(0);
    if (d == 1) continue;
    out.push_back(static_cast<long long>(d));
  }
  return out;
}

class Element {
 public:
  Element() = default;

  const GroupPtr& group() const { return g_; }
  bool valid() const { return static_cast<bool>(g_); }

  const BigInt& integer() const { return z_; }
  const std::vector<long long>& coords() const { return c_; }
  long long residue() const { return c_.empty() ? 0 : c_[0]; }
  const Element& left() const;
  const Element& right() const;

  std::size_t hash() const;
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  friend bool operator<(const Element& a, const Element& b);

  std::string to_string() const;

 private:
  friend class Group;
  GroupPtr g_;
  BigInt z_;
  std::vector<long long> c_;
  std::shared_ptr<const std::pair<Element, Element>> parts_;
};

class Group : public std::enable_shared_from_this<Group> {
 public:
  struct Token {};
  Group(Token, GroupKind k) : kind_(k) {}

  static GroupPtr integers() { return std::make_shared<Group>(Token{}, GroupKind::Integers); }
  static GroupPtr cyclic(long long n) {
    if (n < 1) throw GroupError("cyclic modulus must be >= 1");
    auto g = std::make_shared<Group>(Token{}, GroupKind::Cyclic);
    g->n_ = n;
    return g;
  }
  static GroupPtr free_abelian(long long k) {
    if (k < 0) throw GroupError("rank must be >= 0");
    auto g = std::make_shared<Group>(Token{}, GroupKind::FreeAbelian);
    g->n_ = k;
    return g;
  }
  static GroupPtr free_group(long long gens) {
    if (gens < 0) throw GroupError("generator count must be >= 0");
    auto g = std::make_shared<Group>(Token{}, GroupKind::Free);
    g->n_ = gens;
    return g;
  }
  static GroupPtr sum(GroupPtr l, GroupPtr r) {
    if (!l || !r) throw GroupError("null summand");
    auto g = std::make_shared<Group>(Token{}, GroupKind::Sum);
    g->l_ = std::move(l);
    g->r_ = std::move(r);
    return g;
  }
  // Abelian group given by its non-unit invariant factors (0 marks a free summand).
  static GroupPtr quotient_from_factors(std::vector<long long> factors) {
    std::vector<long long> pos, zeros;
    for (long long d : factors) {
      if (d < 0) d = -d;
      if (d == 1) continue;
      (d == 0 ? zeros : pos).push_back(d);
    }
    // Re-derive the divisibility chain so equal groups get equal descriptors.
    IntMatrix m(pos.size(), pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) m.at(i, i) = pos[i];
    std::vector<long long> canon = invariant_factors(m);
    auto g = std::make_shared<Group>(Token{}, GroupKind::Quotient);
    g->factors_ = std::move(canon);
    g->factors_.insert(g->factors_.end(), zeros.begin(), zeros.end());
    return g;
  }
  // Z^cols modulo the row space of the relation matrix.
  static GroupPtr quotient(const IntMatrix& relations) {
    auto g = std::make_shared<Group>(Token{}, GroupKind::Quotient);
    g->factors_ = invariant_factors(relations);
    return g;
  }

  GroupKind kind() const { return kind_; }
  long long modulus() const { return n_; }
  long long rank() const { return n_; }
  long long generators() const { return n_; }
  const GroupPtr& left() const { return l_; }
  const GroupPtr& right() const { return r_; }
  const std::vector<long long>& factors() const { return factors_; }

  bool is_abelian() const {
    switch (kind_) {
      case GroupKind::Free: return n_ <= 1;
      case GroupKind::Sum: return l_->is_abelian() && r_->is_abelian();
      default: return true;
    }
  }
  bool is_trivial() const {
    switch (kind_) {
      case GroupKind::Integers: return false;
      case GroupKind::Cyclic: return n_ == 1;
      case GroupKind::FreeAbelian:
      case GroupKind::Free: return n_ == 0;
      case GroupKind::Sum: return l_->is_trivial() && r_->is_trivial();
      case GroupKind::Quotient: return factors_.empty();
    }
    return false;
  }
  // Number of elements, or 0 when infinite.
  BigInt order() const {
    switch (kind_) {
      case GroupKind::Cyclic: return n_;
      case GroupKind::FreeAbelian:
      case GroupKind::Free: return n_ == 0 ? 1 : 0;
      case GroupKind::Sum: return l_->order() * r_->order();
      case GroupKind::Quotient: {
        BigInt o = 1;
        for (long long d : factors_) o *= d;
        return o;
      }
      case GroupKind::Integers: return 0;
    }
    return 0;
  }

  friend bool operator==(const Group& a, const Group& b) {
    if (&a == &b) return true;
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case GroupKind::Integers: return true;
      case GroupKind::Cyclic:
      case GroupKind::FreeAbelian:
      case GroupKind::Free: return a.n_ == b.n_;
      case GroupKind::Sum: return *a.l_ == *b.l_ && *a.r_ == *b.r_;
      case GroupKind::Quotient: return a.factors_ == b.factors_;
    }
    return false;
  }
  friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }

  // Compact descriptor: z, z<n>, za<k>, free<g>, sum(<d>,<d>), q(<d>,...).
  std::string describe() const {
    switch (kind_) {
      case GroupKind::Integers: return "z";
      case GroupKind::Cyclic: return "z" + std::to_string(n_);
      case GroupKind::FreeAbelian: return "za" + std::to_string(n_);
      case GroupKind::Free: return "free" + std::to_string(n_);
      case GroupKind::Sum: return "sum(" + l_->describe() + "," + r_->describe() + ")";
      case GroupKind::Quotient: {
        std::string s = "q(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(factors_[i]);
        }
        return s + ")";
      }
    }
    return "?";
  }

  Element zero() const {
    Element e;
    e.g_ = self();
    switch (kind_) {
      case GroupKind::Integers: break;
      case GroupKind::Cyclic: e.c_ = {0}; break;
      case GroupKind::FreeAbelian: e.c_.assign(static_cast<std::size_t>(n_), 0); break;
      case GroupKind::Free: break;
      case GroupKind::Sum:
        e.parts_ = std::make_shared<const std::pair<Element, Element>>(l_->zero(), r_->zero());
        break;
      case GroupKind::Quotient: e.c_.assign(factors_.size(), 0); break;
    }
    return e;
  }

  Element integer(const BigInt& v) const {
    require(GroupKind::Integers);
    Element e;
    e.g_ = self();
    e.z_ = v;
    return e;
  }
  Element residue(long long v) const {
    require(GroupKind::Cyclic);
    Element e;
    e.g_ = self();
    long long r = v % n_;
    if (r < 0) r += n_;
    e.c_ = {r};
    return e;
  }
  Element vector(std::vector<long long> v) const {
    if (kind_ != GroupKind::FreeAbelian && kind_ != GroupKind::Quotient)
      throw GroupError("vector payload needs za<k> or a quotient");
    std::size_t len = kind_ == GroupKind::FreeAbelian ? static_cast<std::size_t>(n_) : factors_.size();
    if (v.size() != len) throw GroupError("vector length does not match group " + describe());
    Element e;
    e.g_ = self();
    e.c_ = std::move(v);
    if (kind_ == GroupKind::Quotient) reduce_quotient(e.c_);
    return e;
  }
  Element word(const std::vector<long long>& letters) const {
    require(GroupKind::Free);
    Element e;
    e.g_ = self();
    for (long long x : letters) {
      if (x == 0 || x > n_ || -x > n_) throw GroupError("letter out of range for " + describe());
      push_letter(e.c_, x);
    }
    return e;
  }
  Element pair(Element a, Element b) const {
    require(GroupKind::Sum);
    if (!a.g_ || !b.g_ || !(*a.g_ == *l_) || !(*b.g_ == *r_)) throw GroupError("pair components do not match summands");
    Element e;
    e.g_ = self();
    e.parts_ = std::make_shared<const std::pair<Element, Element>>(std::move(a), std::move(b));
    return e;
  }

  Element add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element e;
    e.g_ = self();
    switch (kind_) {
      case GroupKind::Integers: e.z_ = a.z_ + b.z_; break;
      case GroupKind::Cyclic: {
        long long r = (a.c_[0] + b.c_[0]) % n_;
        e.c_ = {r};
        break;
      }
      case GroupKind::FreeAbelian:
        e.c_ = a.c_;
        for (std::size_t i = 0; i < e.c_.size(); ++i) e.c_[i] += b.c_[i];
        break;
      case GroupKind::Quotient:
        e.c_ = a.c_;
        for (std::size_t i = 0; i < e.c_.size(); ++i) e.c_[i] += b.c_[i];
        reduce_quotient(e.c_);
        break;
      case GroupKind::Free:
        e.c_ = a.c_;
        for (long long x : b.c_) push_letter(e.c_, x);
        break;
      case GroupKind::Sum:
        e.parts_ = std::make_shared<const std::pair<Element, Element>>(l_->add(a.parts_->first, b.parts_->first),
                                                                       r_->add(a.parts_->second, b.parts_->second));
        break;
    }
    return e;
  }

  Element negate(const Element& a) const {
    check(a);
    Element e;
    e.g_ = self();
    switch (kind_) {
      case GroupKind::Integers: e.z_ = -a.z_; break;
      case GroupKind::Cyclic: e.c_ = {a.c_[0] == 0 ? 0 : n_ - a.c_[0]}; break;
      case GroupKind::FreeAbelian:
        e.c_ = a.c_;
        for (auto& x : e.c_) x = -x;
        break;
      case GroupKind::Quotient:
        e.c_ = a.c_;
        for (auto& x : e.c_) x = -x;
        reduce_quotient(e.c_);
        break;
      case GroupKind::Free:
        e.c_.assign(a.c_.rbegin(), a.c_.rend());
        for (auto& x : e.c_) x = -x;
        break;
      case GroupKind::Sum:
        e.parts_ = std::make_shared<const std::pair<Element, Element>>(l_->negate(a.parts_->first),
                                                                       r_->negate(a.parts_->second));
        break;
    }
    return e;
  }

  bool is_zero(const Element& a) const {
    check(a);
    switch (kind_) {
      case GroupKind::Integers: return a.z_ == 0;
      case GroupKind::Sum: return l_->is_zero(a.parts_->first) && r_->is_zero(a.parts_->second);
      default:
        return std::all_of(a.c_.begin(), a.c_.end(), [](long long x) { return x == 0; });
    }
  }

  // A fixed non-identity element (first generator of every non-trivial summand).
  Element generator() const {
    switch (kind_) {
      case GroupKind::Integers: return integer(1);
      case GroupKind::Cyclic:
        if (n_ == 1) break;
        return residue(1);
      case GroupKind::FreeAbelian: {
        if (n_ == 0) break;
        std::vector<long long> v(static_cast<std::size_t>(n_), 0);
        v[0] = 1;
        return vector(v);
      }
      case GroupKind::Free:
        if (n_ == 0) break;
        return word({1});
      case GroupKind::Quotient: {
        if (factors_.empty()) break;
        std::vector<long long> v(factors_.size(), 0);
        v[0] = 1;
        return vector(v);
      }
      case GroupKind::Sum: {
        Element a = l_->is_trivial() ? l_->zero() : l_->generator();
        Element b = r_->is_trivial() ? r_->zero() : r_->generator();
        if (l_->is_trivial() && r_->is_trivial()) break;
        return pair(a, b);
      }
    }
    throw GroupError("trivial group " + describe() + " has no non-identity element");
  }

  // Re-canonicalize a payload (idempotent on canonical input).
  Element canonical(const Element& a) const {
    check(a);
    switch (kind_) {
      case GroupKind::Cyclic: return residue(a.c_[0]);
      case GroupKind::Quotient: return vector(a.c_);
      case GroupKind::Free: {
        Element e;
        e.g_ = self();
        for (long long x : a.c_) push_letter(e.c_, x);
        return e;
      }
      case GroupKind::Sum: return pair(l_->canonical(a.parts_->first), r_->canonical(a.parts_->second));
      default: return a;
    }
  }

 private:
  friend class Element;

  GroupPtr self() const { return shared_from_this(); }

  void require(GroupKind k) const {
    if (kind_ != k) throw GroupError("operation not supported by group " + describe());
  }
  void check(const Element& a) const {
    if (!a.g_) throw GroupError("uninitialised group element");
    if (a.g_.get() != this && !(*a.g_ == *this))
      throw GroupError("descriptor mismatch: " + a.g_->describe() + " vs " + describe());
  }
  static void push_letter(std::vector<long long>& w, long long x) {
    if (!w.empty() && w.back() == -x)
      w.pop_back();
    else
      w.push_back(x);
  }
  void reduce_quotient(std::vector<long long>& v) const {
    for (std::size_t i = 0; i < v.size(); ++i) {
      long long d = factors_[i];
      if (d > 0) {
        v[i] %= d;
        if (v[i] < 0) v[i] += d;
      }
    }
  }

  GroupKind kind_;
  long long n_ = 0;
  GroupPtr l_, r_;
  std::vector<long long> factors_;
};

inline const Element& Element::left() const {
  if (!parts_) throw GroupError("not a direct-sum element");
  return parts_->first;
}
inline const Element& Element::right() const {
  if (!parts_) throw GroupError("not a direct-sum element");
  return parts_->second;
}

inline bool operator==(const Element& a, const Element& b) {
  if (!a.g_ || !b.g_) return !a.g_ && !b.g_;
  if (a.g_.get() != b.g_.get() && !(*a.g_ == *b.g_)) return false;
  if (a.g_->kind() == GroupKind::Sum) return a.left() == b.left() && a.right() == b.right();
  return a.z_ == b.z_ && a.c_ == b.c_;
}

inline bool operator<(const Element& a, const Element& b) {
  if (!a.g_ || !b.g_) return !a.g_ && b.g_;
  if (a.g_->kind() == GroupKind::Sum && b.g_->kind() == GroupKind::Sum) {
    if (a.left() == b.left()) return a.right() < b.right();
    return a.left() < b.left();
  }
  if (a.z_ != b.z_) return a.z_ < b.z_;
  return a.c_ < b.c_;
}

inline std::size_t Element::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  if (!g_) return h;
  mix(static_cast<std::size_t>(g_->kind()));
  if (parts_) {
    mix(parts_->first.hash());
    mix(parts_->second.hash());
    return h;
  }
  if (g_->kind() == GroupKind::Integers) mix(std::hash<std::string>{}(z_.str()));
  for (long long x : c_) mix(std::hash<long long>{}(x));
  return h;
}

inline std::string Element::to_string() const {
  if (!g_) return "<none>";
  std::ostringstream os;
  switch (g_->kind()) {
    case GroupKind::Integers: os << z_; break;
    case GroupKind::Cyclic: os << c_[0]; break;
    case GroupKind::Sum: os << "(" << left().to_string() << "," << right().to_string() << ")"; break;
    default:
      os << "[";
      for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
      os << "]";
  }
  return os.str();
}

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

inline Element op(const Element& a, const Element& b) {
  if (!a.group()) throw GroupError("uninitialised group element");
  return a.group()->add(a, b);
}
inline Element inv(const Element& a) {
  if (!a.group()) throw GroupError("uninitialised group element");
  return a.group()->negate(a);
}
inline Element identity(const GroupPtr& g) { return g->zero(); }
inline bool is_zero(const Element& a) {
  if (!a.group()) throw GroupError("uninitialised group element");
  return a.group()->is_zero(a);
}
inline Element project(const Element& a, Side side) {
  if (!a.group() || a.group()->kind() != GroupKind::Sum) throw GroupError("projection of a non-direct-sum element");
  return side == Side::Left ? a.left() : a.right();
}
// Coordinate i in {1,2} of a direct-sum element.
inline Element coordinate(const Element& a, int i) { return project(a, i == 1 ? Side::Left : Side::Right); }

// Parser for the compact descriptor grammar.
inline GroupPtr parse_group(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> GroupError {
    return GroupError("bad group descriptor '" + text + "' at " + std::to_string(pos) + ": " + why);
  };
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto number = [&]() -> long long {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || (pos == start + 1 && text[start] == '-')) throw fail("expected number");
    return std::stoll(text.substr(start, pos - start));
  };
  auto has_digit = [&] { return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };
  std::function<GroupPtr()> parse = [&]() -> GroupPtr {
    skip();
    auto starts = [&](const char* kw) { return text.compare(pos, std::char_traits<char>::length(kw), kw) == 0; };
    if (starts("sum")) {
      pos += 3;
      expect('(');
      GroupPtr l = parse();
      expect(',');
      GroupPtr r = parse();
      expect(')');
      return Group::sum(l, r);
    }
    if (starts("free")) {
      pos += 4;
      if (!has_digit()) throw fail("free needs a generator count");
      return Group::free_group(number());
    }
    if (starts("za")) {
      pos += 2;
      if (!has_digit()) throw fail("za needs a rank");
      return Group::free_abelian(number());
    }
    if (starts("q(")) {
      pos += 2;
      std::vector<long long> f;
      skip();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        return Group::quotient_from_factors(f);
      }
      for (;;) {
        f.push_back(number());
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        expect(')');
        break;
      }
      return Group::quotient_from_factors(f);
    }
    if (starts("z")) {
      ++pos;
      if (has_digit()) return Group::cyclic(number());
      return Group::integers();
    }
    throw fail("unknown group");
  };
  GroupPtr g = parse();
  skip();
  if (pos != text.size()) throw fail("trailing characters");
  return g;
}

}  // namespace glg
