#include "qfa/fusion.hpp"

#include <algorithm>
#include <sstream>

namespace qfa {

IrrepId IrrepId::finite(std::size_t i) {
  IrrepId r;
  r.kind = Kind::Finite;
  r.index = i;
  return r;
}

IrrepId IrrepId::su2(unsigned n) {
  IrrepId r;
  r.kind = Kind::Su2;
  r.spin = n;
  return r;
}

IrrepId IrrepId::product(std::vector<IrrepId> parts) {
  IrrepId r;
  r.kind = Kind::Product;
  r.parts = std::move(parts);
  return r;
}

bool IrrepId::operator==(const IrrepId& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Finite: return index == o.index;
    case Kind::Su2: return spin == o.spin;
    case Kind::Product: return parts == o.parts;
  }
  return false;
}

bool IrrepId::operator<(const IrrepId& o) const {
  if (kind != o.kind) return kind < o.kind;
  switch (kind) {
    case Kind::Finite: return index < o.index;
    case Kind::Su2: return spin < o.spin;
    case Kind::Product: return parts < o.parts;
  }
  return false;
}

std::vector<std::string> validate_table(const FiniteFusionTable& t) {
  std::vector<std::string> bad;
  std::size_t n = t.size();
  auto complain = [&](const std::string& s) { bad.push_back(s); };
  if (n == 0) {
    complain("table has no labels");
    return bad;
  }
  if (t.dims.size() != n || t.conj.size() != n || t.coeffs.size() != n * n * n) {
    complain("field lengths are inconsistent with the label count");
    return bad;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (t.dims[a] <= 0)
      complain("dim(" + t.labels[a] + ") is not positive");
  if (t.dims[0] != 1) complain("the trivial object (index 0) must have dim 1");
  for (std::size_t a = 0; a < n; ++a) {
    if (t.conj[a] >= n) {
      complain("conj(" + t.labels[a] + ") out of range");
      return bad;
    }
    if (t.conj[t.conj[a]] != a)
      complain("conj is not an involution at " + t.labels[a]);
  }
  if (t.conj[0] != 0) complain("the trivial object must be self-conjugate");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t.n(a, b, c) < 0)
          complain("negative coefficient at [" + t.labels[a] + "][" +
                   t.labels[b] + "][" + t.labels[c] + "]");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      long long want = (a == c) ? 1 : 0;
      if (t.n(a, 0, c) != want)
        complain("unit law fails: N[" + t.labels[a] + "][" + t.labels[0] +
                 "][" + t.labels[c] + "]");
      if (t.n(0, a, c) != want)
        complain("unit law fails: N[" + t.labels[0] + "][" + t.labels[a] +
                 "][" + t.labels[c] + "]");
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c)
        if (t.n(a, b, c) != t.n(b, a, c)) {
          complain("commutativity fails at [" + t.labels[a] + "][" +
                   t.labels[b] + "]");
          break;
        }
      long long total = 0;
      for (std::size_t c = 0; c < n; ++c) total += t.n(a, b, c) * t.dims[c];
      if (total != t.dims[a] * t.dims[b])
        complain("dimension rule fails at [" + t.labels[a] + "][" +
                 t.labels[b] + "]");
      long long want = (t.conj[a] == b) ? 1 : 0;
      if (t.n(a, b, 0) != want)
        complain("trivial multiplicity in [" + t.labels[a] + "][" +
                 t.labels[b] + "] is not delta(b, conj a)");
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          long long lhs = 0, rhs = 0;
          for (std::size_t e = 0; e < n; ++e) {
            lhs += t.n(a, b, e) * t.n(e, c, d);
            rhs += t.n(b, c, e) * t.n(a, e, d);
          }
          if (lhs != rhs) {
            complain("associativity fails at (" + t.labels[a] + ", " +
                     t.labels[b] + ", " + t.labels[c] + ", " + t.labels[d] +
                     ")");
            break;
          }
        }
  return bad;
}

FusionRing FusionRing::su2() {
  FusionRing r;
  r.kind_ = Kind::Su2;
  return r;
}

FusionRing FusionRing::finite(FiniteFusionTable t) {
  FusionRing r;
  r.kind_ = Kind::Finite;
  r.table_ = std::move(t);
  return r;
}

FusionRing FusionRing::product(std::vector<FusionRing> factors) {
  if (factors.empty()) throw schema_error("product ring needs factors");
  FusionRing r;
  r.kind_ = Kind::Product;
  r.factors_ = std::move(factors);
  return r;
}

const FiniteFusionTable& FusionRing::table() const {
  if (kind_ != Kind::Finite) throw error("not a finite-table ring");
  return table_;
}

bool FusionRing::is_finite() const {
  switch (kind_) {
    case Kind::Finite: return true;
    case Kind::Su2: return false;
    case Kind::Product:
      return std::all_of(factors_.begin(), factors_.end(),
                         [](const FusionRing& f) { return f.is_finite(); });
  }
  return false;
}

std::size_t FusionRing::finite_size() const {
  switch (kind_) {
    case Kind::Finite: return table_.size();
    case Kind::Su2: throw error("SU(2) has infinitely many irreducibles");
    case Kind::Product: {
      std::size_t s = 1;
      for (const auto& f : factors_) s *= f.finite_size();
      return s;
    }
  }
  return 0;
}

std::vector<IrrepId> FusionRing::irreps() const {
  switch (kind_) {
    case Kind::Finite: {
      std::vector<IrrepId> out;
      for (std::size_t i = 0; i < table_.size(); ++i)
        out.push_back(IrrepId::finite(i));
      return out;
    }
    case Kind::Su2:
      throw error("SU(2) has infinitely many irreducibles");
    case Kind::Product: {
      std::vector<IrrepId> out = {IrrepId::product({})};
      for (const auto& f : factors_) {
        std::vector<IrrepId> next;
        for (const auto& partial : out)
          for (const auto& x : f.irreps()) {
            IrrepId p = partial;
            p.parts.push_back(x);
            next.push_back(std::move(p));
          }
        out = std::move(next);
      }
      return out;
    }
  }
  return {};
}

IrrepId FusionRing::trivial() const {
  switch (kind_) {
    case Kind::Finite: return IrrepId::finite(0);
    case Kind::Su2: return IrrepId::su2(0);
    case Kind::Product: {
      std::vector<IrrepId> parts;
      for (const auto& f : factors_) parts.push_back(f.trivial());
      return IrrepId::product(std::move(parts));
    }
  }
  return {};
}

void FusionRing::check(const IrrepId& a) const {
  switch (kind_) {
    case Kind::Finite:
      if (a.kind != IrrepId::Kind::Finite || a.index >= table_.size())
        throw unknown_irrep_error("irrep does not belong to this table");
      return;
    case Kind::Su2:
      if (a.kind != IrrepId::Kind::Su2)
        throw unknown_irrep_error("irrep is not an SU(2) spin");
      return;
    case Kind::Product:
      if (a.kind != IrrepId::Kind::Product || a.parts.size() != factors_.size())
        throw unknown_irrep_error("irrep arity does not match the product ring");
      for (std::size_t i = 0; i < factors_.size(); ++i)
        factors_[i].check(a.parts[i]);
      return;
  }
}

IrrepId FusionRing::conj(const IrrepId& a) const {
  check(a);
  switch (kind_) {
    case Kind::Finite: return IrrepId::finite(table_.conj[a.index]);
    case Kind::Su2: return a;  // every spin is self-conjugate
    case Kind::Product: {
      std::vector<IrrepId> parts;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i].conj(a.parts[i]));
      return IrrepId::product(std::move(parts));
    }
  }
  return a;
}

long long FusionRing::dim(const IrrepId& a) const {
  check(a);
  switch (kind_) {
    case Kind::Finite: return table_.dims[a.index];
    case Kind::Su2: return static_cast<long long>(a.spin) + 1;
    case Kind::Product: {
      long long d = 1;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        d *= factors_[i].dim(a.parts[i]);
      return d;
    }
  }
  return 1;
}

IrrepMultiset FusionRing::fuse(const IrrepId& a, const IrrepId& b) const {
  check(a);
  check(b);
  IrrepMultiset out;
  switch (kind_) {
    case Kind::Finite: {
      for (std::size_t c = 0; c < table_.size(); ++c) {
        long long m = table_.n(a.index, b.index, c);
        if (m > 0) out[IrrepId::finite(c)] = m;
      }
      return out;
    }
    case Kind::Su2: {
      unsigned lo = a.spin > b.spin ? a.spin - b.spin : b.spin - a.spin;
      unsigned hi = a.spin + b.spin;
      for (unsigned s = lo; s <= hi; s += 2) out[IrrepId::su2(s)] = 1;
      return out;
    }
    case Kind::Product: {
      std::vector<std::pair<IrrepId, BigInt>> acc = {{IrrepId::product({}), 1}};
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        IrrepMultiset fi = factors_[i].fuse(a.parts[i], b.parts[i]);
        std::vector<std::pair<IrrepId, BigInt>> next;
        for (const auto& [partial, m] : acc)
          for (const auto& [x, mx] : fi) {
            IrrepId p = partial;
            p.parts.push_back(x);
            next.emplace_back(std::move(p), m * mx);
          }
        acc = std::move(next);
      }
      for (auto& [id, m] : acc) out[id] += m;
      return out;
    }
  }
  return out;
}

std::string FusionRing::label(const IrrepId& a) const {
  check(a);
  switch (kind_) {
    case Kind::Finite: return table_.labels[a.index];
    case Kind::Su2: return "pi" + std::to_string(a.spin);
    case Kind::Product: {
      std::string s = "(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ", ";
        s += factors_[i].label(a.parts[i]);
      }
      return s + ")";
    }
  }
  return "";
}

std::optional<IrrepId> FusionRing::irrep_by_label(const std::string& name) const {
  switch (kind_) {
    case Kind::Finite:
      for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_.labels[i] == name) return IrrepId::finite(i);
      return std::nullopt;
    case Kind::Su2: {
      if (name.size() < 3 || name.compare(0, 2, "pi") != 0) return std::nullopt;
      unsigned spin = 0;
      for (std::size_t i = 2; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return std::nullopt;
        spin = spin * 10 + static_cast<unsigned>(name[i] - '0');
        if (spin > 1000000) return std::nullopt;
      }
      return IrrepId::su2(spin);
    }
    case Kind::Product:
      return std::nullopt;  // no flat naming scheme for tuples
  }
  return std::nullopt;
}

IrrepMultiset su2_character_oracle(unsigned n, unsigned m) {
  // Coefficient vector over exponents -(n+m) .. n+m, step 2 throughout.
  int top = static_cast<int>(n + m);
  std::vector<long long> coeff(2 * top + 1, 0);
  auto idx = [&](int e) { return e + top; };
  for (int i = -static_cast<int>(n); i <= static_cast<int>(n); i += 2)
    for (int j = -static_cast<int>(m); j <= static_cast<int>(m); j += 2)
      coeff[idx(i + j)] += 1;

  IrrepMultiset out;
  for (int e = top; e >= 0; --e) {
    long long c = coeff[idx(e)];
    if (c == 0) continue;
    out[IrrepId::su2(static_cast<unsigned>(e))] = c;
    for (int i = -e; i <= e; i += 2) coeff[idx(i)] -= c;
  }
  for (long long c : coeff)
    if (c != 0) throw error("character peeling left a nonzero remainder");
  return out;
}

FiniteFusionTable cyclic_table(int n) {
  if (n < 1 || n > 12) throw schema_error("cyclic tables are built in for 1 <= n <= 12");
  FiniteFusionTable t;
  std::size_t sz = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < sz; ++i) {
    if (n == 2 && i == 1)
      t.labels.push_back("sgn");
    else
      t.labels.push_back(i == 0 ? "1" : "chi" + std::to_string(i));
    t.dims.push_back(1);
    t.conj.push_back((sz - i) % sz);
  }
  t.coeffs.assign(sz * sz * sz, 0);
  for (std::size_t a = 0; a < sz; ++a)
    for (std::size_t b = 0; b < sz; ++b) t.n(a, b, (a + b) % sz) = 1;
  return t;
}

FiniteFusionTable s3_table() {
  FiniteFusionTable t;
  t.labels = {"1", "sgn", "std"};
  t.dims = {1, 1, 2};
  t.conj = {0, 1, 2};
  t.coeffs.assign(27, 0);
  auto set = [&](int a, int b, std::initializer_list<int> cs) {
    for (int c : cs) t.n(a, b, c) += 1;
  };
  set(0, 0, {0});
  set(0, 1, {1});
  set(0, 2, {2});
  set(1, 0, {1});
  set(1, 1, {0});
  set(1, 2, {2});
  set(2, 0, {2});
  set(2, 1, {2});
  set(2, 2, {0, 1, 2});
  return t;
}

FiniteFusionTable klein4_table() {
  FiniteFusionTable t;
  t.labels = {"1", "a", "b", "ab"};
  t.dims = {1, 1, 1, 1};
  t.conj = {0, 1, 2, 3};
  t.coeffs.assign(64, 0);
  // Z/2 x Z/2 written multiplicatively on the character group.
  auto mul = [](std::size_t x, std::size_t y) { return x ^ y; };
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t.n(a, b, mul(a, b)) = 1;
  return t;
}

FiniteFusionTable trivial_table() { return cyclic_table(1); }

std::optional<FiniteFusionTable> builtin_table(const std::string& name) {
  if (name == "trivial") return trivial_table();
  if (name == "s3") return s3_table();
  if (name == "klein4") return klein4_table();
  if (name.size() >= 2 && name[0] == 'z') {
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      n = n * 10 + (name[i] - '0');
    }
    if (n >= 1 && n <= 12) return cyclic_table(n);
  }
  return std::nullopt;
}

}  // namespace qfa
