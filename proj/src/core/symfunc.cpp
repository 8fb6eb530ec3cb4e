#include "parkfrob/symfunc.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "parkfrob/errors.hpp"

namespace parkfrob {

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::schur: return "schur";
    case Basis::monomial: return "monomial";
    case Basis::homogeneous: return "homogeneous";
    case Basis::elementary: return "elementary";
  }
  return "schur";
}

Basis parse_basis(std::string_view name) {
  if (name == "schur" || name == "s") return Basis::schur;
  if (name == "monomial" || name == "m") return Basis::monomial;
  if (name == "homogeneous" || name == "h") return Basis::homogeneous;
  if (name == "elementary" || name == "e") return Basis::elementary;
  throw input_error("unknown basis '" + std::string(name) + "'");
}

namespace {

std::atomic<int> g_degree_cap{14};

void check_degree(int d) {
  if (d < 0) throw input_error("negative symmetric function degree");
  if (d > g_degree_cap.load()) {
    throw input_error("degree " + std::to_string(d) + " exceeds the degree cap " +
                      std::to_string(g_degree_cap.load()));
  }
}

// Per-degree Kostka matrix and its inverse, indexed by partitions_of(d).
// Reverse lexicographic order refines dominance, so K is upper unitriangular.
struct DegreeTables {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  std::vector<std::vector<std::int64_t>> K;
  std::vector<std::vector<std::int64_t>> Kinv;
};

using KostkaMemo = std::map<std::pair<std::vector<int>, int>, std::int64_t>;

// Tableaux of shape lambda filled with content[0..len): strip off the
// horizontal strip holding the largest letter.
std::int64_t kostka_rec(const std::vector<int>& lambda, const std::vector<int>& content,
                        int len, KostkaMemo& memo) {
  if (len == 0) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, len);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::int64_t total = 0;
  std::vector<int> nu = lambda;
  const int rows = static_cast<int>(lambda.size());
  auto rec = [&](auto&& self, int row, int left) -> void {
    if (row == rows) {
      if (left != 0) return;
      std::vector<int> trimmed = nu;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      total += kostka_rec(trimmed, content, len - 1, memo);
      return;
    }
    const int below = row + 1 < rows ? lambda[row + 1] : 0;
    const int max_take = std::min(left, lambda[row] - below);
    for (int take = 0; take <= max_take; ++take) {
      nu[row] = lambda[row] - take;
      self(self, row + 1, left - take);
    }
    nu[row] = lambda[row];
  };
  rec(rec, 0, content[len - 1]);
  memo.emplace(std::move(key), total);
  return total;
}

const DegreeTables& tables(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DegreeTables>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return *it->second;

  auto t = std::make_unique<DegreeTables>();
  t->parts = partitions_of(d);
  const int np = static_cast<int>(t->parts.size());
  for (int i = 0; i < np; ++i) t->index.emplace(t->parts[i], i);

  t->K.assign(np, std::vector<std::int64_t>(np, 0));
  for (int j = 0; j < np; ++j) {
    // The memo is keyed on the shape only, so it is valid for one content.
    KostkaMemo memo;
    const auto& mu_parts = t->parts[j].parts();
    for (int i = 0; i <= j; ++i) {
      t->K[i][j] = kostka_rec(t->parts[i].parts(), mu_parts,
                              static_cast<int>(mu_parts.size()), memo);
    }
  }
  // Unitriangular inverse by back substitution, column by column.
  t->Kinv.assign(np, std::vector<std::int64_t>(np, 0));
  for (int j = 0; j < np; ++j) {
    t->Kinv[j][j] = 1;
    for (int i = j - 1; i >= 0; --i) {
      std::int64_t s = 0;
      for (int l = i + 1; l <= j; ++l) s += t->K[i][l] * t->Kinv[l][j];
      t->Kinv[i][j] = -s;
    }
  }
  auto [it, _] = cache.emplace(d, std::move(t));
  return *it->second;
}

int index_of(const DegreeTables& t, const Partition& p) {
  auto it = t.index.find(p);
  if (it == t.index.end()) throw input_error("partition " + p.to_string() + " has wrong size");
  return it->second;
}

SymFunc to_schur(const SymFunc& f) {
  if (f.basis() == Basis::schur) return f;
  const int d = f.degree();
  check_degree(d);
  const auto& t = tables(d);
  const int np = static_cast<int>(t.parts.size());
  SymFunc out(d, Basis::schur);
  for (const auto& [p, c] : f.terms()) {
    const int mu = index_of(t, p);
    switch (f.basis()) {
      case Basis::monomial:
        for (int l = mu; l < np; ++l) {
          if (t.Kinv[mu][l] != 0) out.add_term(t.parts[l], c * LaurentQT(t.Kinv[mu][l]));
        }
        break;
      case Basis::homogeneous:
        for (int l = 0; l <= mu; ++l) {
          if (t.K[l][mu] != 0) out.add_term(t.parts[l], c * LaurentQT(t.K[l][mu]));
        }
        break;
      case Basis::elementary:
        for (int l = 0; l <= mu; ++l) {
          if (t.K[l][mu] != 0) out.add_term(t.parts[l].conjugate(), c * LaurentQT(t.K[l][mu]));
        }
        break;
      case Basis::schur: break;
    }
  }
  return out;
}

SymFunc from_schur(const SymFunc& f, Basis target) {
  if (target == Basis::schur) return f;
  const int d = f.degree();
  check_degree(d);
  const auto& t = tables(d);
  const int np = static_cast<int>(t.parts.size());
  SymFunc out(d, target);
  for (const auto& [p, c] : f.terms()) {
    const int lam = index_of(t, p);
    switch (target) {
      case Basis::monomial:
        for (int m = lam; m < np; ++m) {
          if (t.K[lam][m] != 0) out.add_term(t.parts[m], c * LaurentQT(t.K[lam][m]));
        }
        break;
      case Basis::homogeneous:
        for (int m = 0; m <= lam; ++m) {
          if (t.Kinv[m][lam] != 0) out.add_term(t.parts[m], c * LaurentQT(t.Kinv[m][lam]));
        }
        break;
      case Basis::elementary: {
        const int lc = index_of(t, p.conjugate());
        for (int m = 0; m <= lc; ++m) {
          if (t.Kinv[m][lc] != 0) out.add_term(t.parts[m], c * LaurentQT(t.Kinv[m][lc]));
        }
        break;
      }
      case Basis::schur: break;
    }
  }
  return out;
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Partition::from_composition(std::move(v));
}

// Littlewood-Richardson product s_a * s_b as an integer Schur expansion.
const std::map<Partition, std::int64_t>& schur_product(const Partition& a, const Partition& b) {
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, std::map<Partition, std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({a, b}); it != cache.end()) return it->second;
  }
  const int d = a.size() + b.size();
  check_degree(d);
  const auto& ta = tables(a.size());
  const auto& tb = tables(b.size());
  const auto& td = tables(d);
  const int ia = index_of(ta, a);
  const int ib = index_of(tb, b);
  // s_a = sum_m Kinv[m][a] h_m, likewise for b; h_m h_m' = h_{m u m'}.
  std::vector<std::int64_t> hcoef(td.parts.size(), 0);
  for (int m = 0; m <= ia; ++m) {
    if (ta.Kinv[m][ia] == 0) continue;
    for (int m2 = 0; m2 <= ib; ++m2) {
      if (tb.Kinv[m2][ib] == 0) continue;
      hcoef[index_of(td, merge(ta.parts[m], tb.parts[m2]))] += ta.Kinv[m][ia] * tb.Kinv[m2][ib];
    }
  }
  std::map<Partition, std::int64_t> out;
  for (std::size_t m = 0; m < hcoef.size(); ++m) {
    if (hcoef[m] == 0) continue;
    for (std::size_t l = 0; l <= m; ++l) {
      if (td.K[l][m] != 0) out[td.parts[l]] += td.K[l][m] * hcoef[m];
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  std::lock_guard lock(mu);
  auto [it, _] = cache.emplace(std::make_pair(a, b), std::move(out));
  return it->second;
}

}  // namespace

int degree_cap() { return g_degree_cap.load(); }

void set_degree_cap(int cap) {
  if (cap < 1) throw input_error("degree cap must be positive");
  g_degree_cap.store(cap);
}

SymFunc::SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {
  if (degree < 0) throw input_error("negative symmetric function degree");
}

SymFunc SymFunc::basis_element(Basis b, const Partition& p, LaurentQT c) {
  SymFunc f(p.size(), b);
  f.add_term(p, c);
  return f;
}

LaurentQT SymFunc::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? LaurentQT{} : it->second;
}

void SymFunc::add_term(const Partition& p, const LaurentQT& c) {
  if (p.size() != degree_) {
    throw input_error("partition " + p.to_string() + " does not have size " +
                      std::to_string(degree_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymFunc& SymFunc::operator+=(const SymFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero() && terms_.empty() && degree_ != rhs.degree_) degree_ = rhs.degree_;
  if (rhs.degree_ != degree_) throw input_error("adding symmetric functions of different degrees");
  const SymFunc other = rhs.basis_ == basis_ ? rhs : change_basis(rhs, basis_);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& rhs) {
  return *this += rhs.map_coeffs([](const LaurentQT& c) { return -c; });
}

SymFunc& SymFunc::operator*=(const LaurentQT& c) {
  return *this = map_coeffs([&](const LaurentQT& x) { return x * c; });
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree_ != b.degree_) return false;
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return to_schur(a).terms_ == to_schur(b).terms_;
}

SymFunc SymFunc::map_coeffs(const std::function<LaurentQT(const LaurentQT&)>& fn) const {
  SymFunc out(degree_, basis_);
  for (const auto& [p, c] : terms_) out.add_term(p, fn(c));
  return out;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  const char* sym = "s";
  switch (basis_) {
    case Basis::schur: sym = "s"; break;
    case Basis::monomial: sym = "m"; break;
    case Basis::homogeneous: sym = "h"; break;
    case Basis::elementary: sym = "e"; break;
  }
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")*" << sym << it->first.to_string();
  }
  return os.str();
}

std::int64_t kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw input_error("kostka: sizes differ for " + lambda.to_string() + " and " +
                      mu.to_string());
  }
  check_degree(lambda.size());
  const auto& t = tables(lambda.size());
  return t.K[index_of(t, lambda)][index_of(t, mu)];
}

SymFunc change_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  return from_schur(to_schur(f), target);
}

LaurentQT hall_inner(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree()) throw input_error("hall_inner: degree mismatch");
  const SymFunc a = to_schur(f);
  const SymFunc b = to_schur(g);
  LaurentQT sum;
  for (const auto& [p, c] : a.terms()) {
    auto it = b.terms().find(p);
    if (it != b.terms().end()) sum += c * it->second;
  }
  return sum;
}

SymFunc mult(const SymFunc& f, const SymFunc& g) {
  const int d = f.degree() + g.degree();
  check_degree(d);
  const SymFunc a = change_basis(f, Basis::homogeneous);
  const SymFunc b = change_basis(g, Basis::homogeneous);
  SymFunc prod(d, Basis::homogeneous);
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) prod.add_term(merge(pa, pb), ca * cb);
  }
  return to_schur(prod);
}

SymFunc skew_perp(const Partition& lambda, const SymFunc& f) {
  const int d = f.degree() - lambda.size();
  if (d < 0) return SymFunc(0, Basis::schur);
  const SymFunc fs = to_schur(f);
  if (lambda.empty()) return fs;
  SymFunc out(d, Basis::schur);
  for (const Partition& nu : partitions_of(d)) {
    LaurentQT c;
    for (const auto& [kappa, lr] : schur_product(lambda, nu)) {
      auto it = fs.terms().find(kappa);
      if (it != fs.terms().end()) c += it->second * LaurentQT(lr);
    }
    out.add_term(nu, c);
  }
  return out;
}

SymFunc omega_involution(const SymFunc& f) {
  const SymFunc fs = to_schur(f);
  SymFunc out(f.degree(), Basis::schur);
  for (const auto& [p, c] : fs.terms()) out.add_term(p.conjugate(), c);
  return out;
}

}  // namespace parkfrob
