#include "latforge/linear.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace latforge {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

int inv_mod(int a, int q) {
  // q prime, a != 0
  int r = 1, e = q - 2, base = a % q;
  while (e) {
    if (e & 1) r = r * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return r;
}

using Matrix = std::vector<std::vector<std::uint8_t>>;

// In-place reduced row echelon form; returns rank. Zero rows are dropped.
std::size_t rref(Matrix& m, int q) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    int inv = inv_mod(m[r][c], q);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = std::uint8_t(m[r][j] * inv % q);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      int f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = std::uint8_t(((m[i][j] - f * m[r][j]) % q + q) % q);
    }
    ++r;
  }
  m.resize(r);
  return r;
}

Matrix to_bytes(const std::vector<std::vector<int>>& rows, int q, int ambient) {
  Matrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (int(row.size()) != ambient) throw DimensionMismatchError();
    std::vector<std::uint8_t> r(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) r[j] = std::uint8_t(((row[j] % q) + q) % q);
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

Subspace::Subspace(int q, int ambient_dim) : q_(q), ambient_(ambient_dim) {
  if (!is_prime(q)) throw BadParamError("BadParam: modulus must be prime");
  if (ambient_dim < 0) throw BadParamError("BadParam: negative dimension");
}

Subspace::Subspace(int q, int ambient_dim, const std::vector<std::vector<int>>& rows)
    : Subspace(q, ambient_dim) {
  rows_ = to_bytes(rows, q, ambient_dim);
  rref(rows_, q);
}

Subspace Subspace::full(int q, int ambient_dim) {
  Subspace s(q, ambient_dim);
  s.rows_.assign(std::size_t(ambient_dim), std::vector<std::uint8_t>(std::size_t(ambient_dim), 0));
  for (int i = 0; i < ambient_dim; ++i) s.rows_[std::size_t(i)][std::size_t(i)] = 1;
  return s;
}

Subspace Subspace::span(int q, int ambient_dim, const std::vector<std::vector<int>>& vectors) {
  return Subspace(q, ambient_dim, vectors);
}

bool Subspace::contains(const std::vector<std::uint8_t>& vec) const {
  if (int(vec.size()) != ambient_) throw DimensionMismatchError();
  std::vector<std::uint8_t> v = vec;
  for (const auto& row : rows_) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c < row.size() && v[c] != 0) {
      int f = v[c];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::uint8_t(((v[j] - f * row[j]) % q_ + q_) % q_);
    }
  }
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

Subspace sum(const Subspace& x, const Subspace& y) {
  if (x.q_ != y.q_) throw FieldMismatchError();
  if (x.ambient_ != y.ambient_) throw DimensionMismatchError();
  Subspace s(x.q_, x.ambient_);
  Matrix m = x.rows_;
  m.insert(m.end(), y.rows_.begin(), y.rows_.end());
  rref(m, x.q_);
  s.rows_ = std::move(m);
  return s;
}

Subspace intersect(const Subspace& x, const Subspace& y) {
  if (x.q_ != y.q_) throw FieldMismatchError();
  if (x.ambient_ != y.ambient_) throw DimensionMismatchError();
  const int q = x.q_;
  const std::size_t n = std::size_t(x.ambient_);
  // Zassenhaus: eliminate [X | X] stacked over [Y | 0]; rows whose left block
  // vanished carry an intersection basis in the right block.
  Matrix m;
  for (const auto& row : x.rows_) {
    std::vector<std::uint8_t> wide(2 * n, 0);
    std::copy(row.begin(), row.end(), wide.begin());
    std::copy(row.begin(), row.end(), wide.begin() + long(n));
    m.push_back(std::move(wide));
  }
  for (const auto& row : y.rows_) {
    std::vector<std::uint8_t> wide(2 * n, 0);
    std::copy(row.begin(), row.end(), wide.begin());
    m.push_back(std::move(wide));
  }
  rref(m, q);
  Subspace s(q, x.ambient_);
  Matrix inter;
  for (const auto& row : m) {
    bool left_zero = std::all_of(row.begin(), row.begin() + long(n), [](std::uint8_t v) { return v == 0; });
    if (left_zero) inter.emplace_back(row.begin() + long(n), row.end());
  }
  rref(inter, q);
  s.rows_ = std::move(inter);
  return s;
}

bool leq(const Subspace& x, const Subspace& y) {
  if (x.q() != y.q()) throw FieldMismatchError();
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionMismatchError();
  for (const auto& row : x.rows())
    if (!y.contains(row)) return false;
  return true;
}

std::uint64_t subspace_count(int q, int n) {
  // sum over k of the Gaussian binomial [n choose k]_q
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
      std::uint64_t qn = 1, qk = 1;
      for (int t = 0; t < n - i; ++t) qn *= std::uint64_t(q);
      for (int t = 0; t < k - i; ++t) qk *= std::uint64_t(q);
      num *= qn - 1;
      den *= qk - 1;
    }
    total += num / den;
  }
  return total;
}

SubspaceLattice full_subspace_lattice(int q, int n, std::size_t cap) {
  if (!is_prime(q)) throw BadParamError("BadParam: modulus must be prime");
  if (n < 0 || n > 16) throw BadParamError("BadParam: ambient dimension out of range");
  std::uint64_t count = subspace_count(q, n);
  if (count > cap) throw CapExceededError(cap, std::size_t(count));

  SubspaceLattice out;
  out.q = q;
  out.n = n;
  // enumerate RREFs dimension by dimension: choose pivot columns, then fill
  // free entries (right of a pivot, outside later pivot columns)
  for (int k = 0; k <= n; ++k) {
    std::vector<Subspace> of_dim;
    std::vector<int> pivots(std::size_t(k), 0);
    std::function<void(int, int)> choose = [&](int idx, int from) {
      if (idx == k) {
        std::vector<std::pair<int, int>> free_cells;  // (row, col)
        for (int r = 0; r < k; ++r)
          for (int c = pivots[std::size_t(r)] + 1; c < n; ++c)
            if (std::find(pivots.begin() + r + 1, pivots.end(), c) == pivots.end())
              free_cells.emplace_back(r, c);
        std::vector<std::vector<int>> rows(std::size_t(k), std::vector<int>(std::size_t(n), 0));
        for (int r = 0; r < k; ++r) rows[std::size_t(r)][std::size_t(pivots[std::size_t(r)])] = 1;
        std::function<void(std::size_t)> fill = [&](std::size_t cell) {
          if (cell == free_cells.size()) {
            of_dim.emplace_back(q, n, rows);
            return;
          }
          auto [r, c] = free_cells[cell];
          for (int v = 0; v < q; ++v) {
            rows[std::size_t(r)][std::size_t(c)] = v;
            fill(cell + 1);
          }
          rows[std::size_t(r)][std::size_t(c)] = 0;
        };
        fill(0);
        return;
      }
      for (int c = from; c < n; ++c) {
        pivots[std::size_t(idx)] = c;
        choose(idx + 1, c + 1);
      }
    };
    choose(0, 0);
    std::sort(of_dim.begin(), of_dim.end(),
              [](const Subspace& a, const Subspace& b) { return a.rows() < b.rows(); });
    out.elements.insert(out.elements.end(), of_dim.begin(), of_dim.end());
  }

  out.lattice = FiniteLattice::from_order(out.elements.size(), [&](ElementId i, ElementId j) {
    return leq(out.elements[i], out.elements[j]);
  });
  return out;
}

Subspace relative_complement_linear(const Subspace& x, const Subspace& a, const Subspace& b) {
  if (!(leq(a, x) && leq(x, b))) throw BadIntervalError("BadInterval: need A <= X <= B");
  const int q = x.q();
  const int n = x.ambient_dim();
  // extend a basis of A by rows of X, then by rows of B; the complement is
  // A plus the extension vectors that came from outside X
  Subspace acc = a;
  Subspace compl_part = a;
  for (const auto& row : x.rows()) {
    if (acc.contains(row)) continue;
    std::vector<std::vector<int>> one{std::vector<int>(row.begin(), row.end())};
    acc = sum(acc, Subspace(q, n, one));
  }
  for (const auto& row : b.rows()) {
    if (acc.contains(row)) continue;
    std::vector<std::vector<int>> one{std::vector<int>(row.begin(), row.end())};
    acc = sum(acc, Subspace(q, n, one));
    compl_part = sum(compl_part, Subspace(q, n, one));
  }
  return compl_part;
}

CdFamily::CdFamily(int big_n, int q) : n_(big_n), q_(q), c0_(q, 2 * big_n), d0_(q, 2 * big_n) {
  if (big_n < 3) throw BadParamError("BadParam: truncation needs N >= 3");
  std::vector<std::vector<int>> cgen, dgen;
  for (int k = 0; k < big_n; ++k) {
    std::vector<int> v(std::size_t(2 * big_n), 0);
    v[std::size_t(k)] = 1;           // a_k
    v[std::size_t(big_n + k)] = 1;   // b_k
    dgen.push_back(v);
    if (k > 0) v[std::size_t(k - 1)] += 1;  // a_{k-1}
    cgen.push_back(v);
  }
  c0_ = Subspace(q, 2 * big_n, cgen);
  d0_ = Subspace(q, 2 * big_n, dgen);
}

void CdFamily::check(int n) const {
  if (n < 0 || n > n_ - 2) throw IndexOutOfTruncationError(n);
}

Subspace CdFamily::a(int n) const {
  check(n);
  std::vector<std::vector<int>> gens;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> v(std::size_t(2 * n_), 0);
    v[std::size_t(k)] = 1;
    gens.push_back(std::move(v));
  }
  return Subspace(q_, 2 * n_, gens);
}

Subspace CdFamily::b(int n) const {
  check(n);
  std::vector<std::vector<int>> gens;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> v(std::size_t(2 * n_), 0);
    v[std::size_t(n_ + k)] = 1;
    gens.push_back(std::move(v));
  }
  return Subspace(q_, 2 * n_, gens);
}

Subspace CdFamily::c(int n) const {
  check(n);
  if (n == 0) return c0_;
  return sum(sum(c0_, a(n - 1)), b(n - 1));
}

Subspace CdFamily::d(int n) const {
  check(n);
  if (n == 0) return d0_;
  return sum(sum(d0_, a(n - 1)), b(n - 1));
}

Subspace CdFamily::expected_cd_intersection(int n) const {
  check(n);
  std::vector<std::vector<int>> gens;
  for (int k = 0; k < n; ++k) {
    std::vector<int> va(std::size_t(2 * n_), 0), vb(std::size_t(2 * n_), 0);
    va[std::size_t(k)] = 1;
    vb[std::size_t(n_ + k)] = 1;
    gens.push_back(std::move(va));
    gens.push_back(std::move(vb));
  }
  std::vector<int> vab(std::size_t(2 * n_), 0);
  vab[std::size_t(n)] = 1;
  vab[std::size_t(n_ + n)] = 1;
  gens.push_back(std::move(vab));
  return Subspace(q_, 2 * n_, gens);
}

}  // namespace latforge
