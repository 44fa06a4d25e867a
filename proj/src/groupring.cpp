#include "gdist/groupring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gdist {

PointSet point_union(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool point_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::size_t index_in(const PointSet& s, int p) {
  auto it = std::lower_bound(s.begin(), s.end(), p);
  if (it == s.end() || *it != p) throw std::invalid_argument("point " + std::to_string(p) + " not in support");
  return static_cast<std::size_t>(it - s.begin());
}

void check_set(const PointSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) throw std::invalid_argument("support must be sorted and distinct");
}

// Dense lookup from point id to position in a support; -1 when absent.
struct PosMap {
  std::vector<int> pos;
  explicit PosMap(const PointSet& s) {
    const int top = s.empty() ? 0 : s.back() + 1;
    pos.assign(static_cast<std::size_t>(top), -1);
    for (std::size_t i = 0; i < s.size(); ++i) pos[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  }
  int operator[](int p) const {
    return p >= 0 && p < static_cast<int>(pos.size()) ? pos[static_cast<std::size_t>(p)] : -1;
  }
};

// Key over `from` lifted to positions in `to` (fixed points outside `from`).
std::vector<int> lift_positions(const PointSet& from, const std::vector<int>& key, const PointSet& to,
                                const PosMap& to_pos) {
  std::vector<int> out(to.size());
  std::iota(out.begin(), out.end(), 0);
  for (std::size_t i = 0; i < from.size(); ++i) out[static_cast<std::size_t>(to_pos[from[i]])] = to_pos[key[i]];
  return out;
}

// Restricts a position-permutation to the positions flagged in `keep`.
// Returns the restricted images (as positions) in order of kept positions and
// counts cycles that contain no kept position.
int restrict_positions(const std::vector<int>& p, const std::vector<char>& keep, std::vector<int>& out,
                       std::vector<char>& seen) {
  const std::size_t n = p.size();
  out.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    int j = p[i];
    while (!keep[static_cast<std::size_t>(j)]) j = p[static_cast<std::size_t>(j)];
    out.push_back(j);
  }
  seen.assign(n, 0);
  int avoided = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    bool hit = false;
    std::size_t j = i;
    do {
      seen[j] = 1;
      hit = hit || keep[j];
      j = static_cast<std::size_t>(p[j]);
    } while (j != i);
    if (!hit) ++avoided;
  }
  return avoided;
}

}  // namespace

Perm Perm::identity(const PointSet& s) {
  check_set(s);
  return Perm{s, s};
}

Perm Perm::from_cycles(const PointSet& s, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(s);
  std::vector<char> used(s.size(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::size_t at = index_in(s, c[i]);
      if (used[at]) throw std::invalid_argument("point repeated in cycles");
      used[at] = 1;
      p.image[at] = c[(i + 1) % c.size()];
    }
  return p;
}

int Perm::operator()(int q) const {
  auto it = std::lower_bound(support.begin(), support.end(), q);
  if (it == support.end() || *it != q) return q;
  return image[static_cast<std::size_t>(it - support.begin())];
}

Perm Perm::lift(const PointSet& bigger) const {
  if (!point_subset(support, bigger)) throw std::invalid_argument("lift: support not contained");
  Perm p = identity(bigger);
  for (std::size_t i = 0; i < support.size(); ++i) p.image[index_in(bigger, support[i])] = image[i];
  return p;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(support.size(), 0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    std::size_t j = i;
    do {
      seen[j] = 1;
      c.push_back(support[j]);
      j = index_in(support, image[j]);
    } while (j != i);
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::str() const {
  std::string s;
  for (const auto& c : cycles()) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm compose(const Perm& a, const Perm& b) {
  const PointSet u = point_union(a.support, b.support);
  const PosMap pos(u);
  auto la = lift_positions(a.support, a.image, u, pos);
  auto lb = lift_positions(b.support, b.image, u, pos);
  Perm out{u, std::vector<int>(u.size())};
  for (std::size_t i = 0; i < u.size(); ++i) out.image[i] = u[static_cast<std::size_t>(la[static_cast<std::size_t>(lb[i])])];
  return out;
}

Perm restrict_perm(const Perm& s, const PointSet& sub, int* avoided) {
  if (!point_subset(sub, s.support)) throw std::invalid_argument("projection target not in support");
  const PosMap pos(s.support);
  std::vector<int> p(s.support.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = pos[s.image[i]];
  std::vector<char> keep(p.size(), 0), seen;
  for (int q : sub) keep[static_cast<std::size_t>(pos[q])] = 1;
  std::vector<int> out;
  const int av = restrict_positions(p, keep, out, seen);
  if (avoided) *avoided = av;
  Perm r{sub, {}};
  for (int j : out) r.image.push_back(s.support[static_cast<std::size_t>(j)]);
  return r;
}

GroupRingElem GroupRingElem::identity(const PointSet& s, const LaurentPoly& c) {
  check_set(s);
  GroupRingElem e(s);
  e.add_key(s, c);
  return e;
}

GroupRingElem GroupRingElem::single(const Perm& p, const LaurentPoly& c) {
  GroupRingElem e(p.support);
  e.add(p, c);
  return e;
}

void GroupRingElem::add_key(const Key& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GroupRingElem::add(const Perm& p, const LaurentPoly& c) {
  if (p.support != support_) {
    if (!point_subset(p.support, support_)) throw std::invalid_argument("add: permutation support mismatch");
    add_key(p.lift(support_).image, c);
    return;
  }
  add_key(p.image, c);
}

LaurentPoly GroupRingElem::coeff(const Perm& p) const {
  const Perm q = p.support == support_ ? p : p.lift(support_);
  auto it = terms_.find(q.image);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

GroupRingElem GroupRingElem::lifted(const PointSet& bigger) const {
  if (bigger == support_) return *this;
  GroupRingElem out(bigger);
  for (const auto& [k, c] : terms_) out.add_key(Perm{support_, k}.lift(bigger).image, c);
  return out;
}

LaurentPoly GroupRingElem::coeff_sum() const {
  LaurentPoly s;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  if (o.support_ != support_) {
    if (terms_.empty() && support_.empty()) {
      *this = o;
      return *this;
    }
    const PointSet u = point_union(support_, o.support_);
    *this = lifted(u);
    for (const auto& [k, c] : o.lifted(u).terms_) add_key(k, c);
    return *this;
  }
  for (const auto& [k, c] : o.terms_) add_key(k, c);
  return *this;
}

GroupRingElem operator*(const LaurentPoly& s, const GroupRingElem& a) {
  GroupRingElem out(a.support_);
  for (const auto& [k, c] : a.terms_) out.add_key(k, s * c);
  return out;
}

bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
  if (a.support_ == b.support_) return a.terms_ == b.terms_;
  const PointSet u = point_union(a.support_, b.support_);
  return a.lifted(u).terms_ == b.lifted(u).terms_;
}

std::string GroupRingElem::dump(const std::string& var) const {
  std::ostringstream os;
  for (const auto& [k, c] : terms_) os << Perm{support_, k}.str() << "\t" << c.str(var) << "\n";
  return os.str();
}

namespace {

// Both factors as position arrays over the union support.
struct Lifted {
  PointSet u;
  std::vector<std::pair<std::vector<int>, const LaurentPoly*>> a, b;
};

Lifted lift_both(const GroupRingElem& x, const GroupRingElem& y) {
  Lifted l;
  l.u = point_union(x.support(), y.support());
  const PosMap pos(l.u);
  for (const auto& [k, c] : x.terms()) l.a.emplace_back(lift_positions(x.support(), k, l.u, pos), &c);
  for (const auto& [k, c] : y.terms()) l.b.emplace_back(lift_positions(y.support(), k, l.u, pos), &c);
  return l;
}

}  // namespace

GroupRingElem ring_multiply(const GroupRingElem& a, const GroupRingElem& b) {
  const Lifted l = lift_both(a, b);
  GroupRingElem out(l.u);
  std::vector<int> key(l.u.size());
  for (const auto& [pa, ca] : l.a)
    for (const auto& [pb, cb] : l.b) {
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = l.u[static_cast<std::size_t>(pa[static_cast<std::size_t>(pb[i])])];
      out.add_key(key, (*ca) * (*cb));
    }
  return out;
}

namespace {

GroupRingElem project(const GroupRingElem& e, const PointSet& sub, bool count_faces) {
  check_set(sub);
  if (!point_subset(sub, e.support())) throw std::invalid_argument("projection target not in support");
  const PointSet& s = e.support();
  const PosMap pos(s);
  std::vector<char> keep(s.size(), 0), seen;
  for (int q : sub) keep[static_cast<std::size_t>(pos[q])] = 1;
  GroupRingElem out(sub);
  std::vector<int> p(s.size()), r, key;
  for (const auto& [k, c] : e.terms()) {
    for (std::size_t i = 0; i < s.size(); ++i) p[i] = pos[k[i]];
    const int av = restrict_positions(p, keep, r, seen);
    key.clear();
    for (int j : r) key.push_back(s[static_cast<std::size_t>(j)]);
    out.add_key(key, count_faces ? c.shifted(av) : c);
  }
  return out;
}

}  // namespace

GroupRingElem proj(const GroupRingElem& e, const PointSet& sub) { return project(e, sub, false); }
GroupRingElem face_proj(const GroupRingElem& e, const PointSet& sub) { return project(e, sub, true); }

GroupRingElem mul_face_proj(const GroupRingElem& a, const GroupRingElem& b, const PointSet& sub) {
  check_set(sub);
  const Lifted l = lift_both(a, b);
  if (!point_subset(sub, l.u)) throw std::invalid_argument("projection target not in support");
  const PosMap pos(l.u);
  std::vector<char> keep(l.u.size(), 0), seen;
  for (int q : sub) keep[static_cast<std::size_t>(pos[q])] = 1;
  // Accumulate by face count first so each product is built once per key.
  std::map<std::vector<int>, LaurentPoly> acc;
  std::vector<int> prod(l.u.size()), r, key;
  for (const auto& [pa, ca] : l.a)
    for (const auto& [pb, cb] : l.b) {
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = pa[static_cast<std::size_t>(pb[i])];
      const int av = restrict_positions(prod, keep, r, seen);
      key.clear();
      for (int j : r) key.push_back(l.u[static_cast<std::size_t>(j)]);
      LaurentPoly t = ((*ca) * (*cb)).shifted(av);
      auto [it, fresh] = acc.try_emplace(key, std::move(t));
      if (!fresh) it->second += t;
    }
  GroupRingElem out(sub);
  for (auto& [k, c] : acc) out.add_key(k, c);
  return out;
}

GroupRingElem relabel(const GroupRingElem& e, const std::function<int(int)>& f) {
  const PointSet& s = e.support();
  PointSet ns;
  for (int p : s) ns.push_back(f(p));
  std::sort(ns.begin(), ns.end());
  std::vector<std::size_t> where(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    where[i] = static_cast<std::size_t>(std::lower_bound(ns.begin(), ns.end(), f(s[i])) - ns.begin());
  GroupRingElem out(ns);
  std::vector<int> key(s.size());
  for (const auto& [k, c] : e.terms()) {
    for (std::size_t i = 0; i < s.size(); ++i) key[where[i]] = f(k[i]);
    out.add_key(key, c);
  }
  return out;
}

PointSet points_of_darts(const std::vector<int>& darts, FaceMode mode) {
  PointSet s;
  for (int d : darts) {
    if (mode == FaceMode::orientable) {
      s.push_back(d);
    } else {
      s.push_back(flag(d, 0));
      s.push_back(flag(d, 1));
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

GroupRingElem cyclic_sum_element(const std::vector<std::vector<int>>& vertex_darts, FaceMode mode) {
  std::vector<int> all;
  for (const auto& ds : vertex_darts) {
    if (ds.empty()) throw std::invalid_argument("cyclic_sum_element: empty dart list");
    all.insert(all.end(), ds.begin(), ds.end());
  }
  const PointSet support = points_of_darts(all, mode);
  if (std::adjacent_find(support.begin(), support.end()) != support.end())
    throw std::invalid_argument("cyclic_sum_element: dart lists overlap");
  GroupRingElem acc = GroupRingElem::identity(support);
  for (const auto& ds0 : vertex_darts) {
    std::vector<int> ds = ds0;
    std::sort(ds.begin(), ds.end());
    const PointSet vs = points_of_darts(ds, mode);
    GroupRingElem local(vs);
    std::vector<int> rest(ds.begin() + 1, ds.end());
    do {
      std::vector<int> cyc{ds[0]};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      Perm p = Perm::identity(vs);
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (mode == FaceMode::orientable) {
          p.image[index_in(vs, a)] = b;
        } else {
          p.image[index_in(vs, flag(a, 0))] = flag(b, 0);
          p.image[index_in(vs, flag(b, 1))] = flag(a, 1);
        }
      }
      local.add(p, LaurentPoly(1));
    } while (std::next_permutation(rest.begin(), rest.end()));
    acc = ring_multiply(acc, local);
  }
  return acc;
}

GroupRingElem face_element(const Graph& h, FaceMode mode, const OracleOptions& opts) {
  std::vector<int> darts(static_cast<std::size_t>(h.dart_count()));
  std::iota(darts.begin(), darts.end(), 0);
  const PointSet support = points_of_darts(darts, mode);
  GroupRingElem out(support);
  const int nd = h.dart_count();
  if (mode == FaceMode::orientable) {
    std::vector<int> key(static_cast<std::size_t>(nd));
    for_each_embedding(h, false, [&](const EmbeddingRep& rep) {
      for (int d = 0; d < nd; ++d) key[static_cast<std::size_t>(d)] = rep.succ[static_cast<std::size_t>(d ^ 1)];
      out.add_key(key, LaurentPoly(1));
    }, opts);
    return out;
  }
  const int ne = h.edge_count();
  BigInt need = rotation_system_count(h);
  need <<= static_cast<mp_bitcnt_t>(ne);
  if (need > BigInt(std::to_string(opts.budget))) throw BudgetExceeded(need, BigInt(std::to_string(opts.budget)));
  std::vector<int> key(static_cast<std::size_t>(2 * nd));
  OracleOptions big = opts;
  big.budget = ~std::uint64_t{0};
  for_each_embedding(h, false, [&](const EmbeddingRep& rep) {
    const auto pred = predecessors(rep.succ);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ne); ++m) {
      for (int p = 0; p < 2 * nd; ++p) {
        const int d = p >> 1, s = p & 1;
        const int t = static_cast<int>((m >> (d >> 1)) & 1u);
        const int d2 = d ^ 1, s2 = s ^ 1 ^ t;  // edge involution
        key[static_cast<std::size_t>(p)] = s2 ? flag(rep.succ[static_cast<std::size_t>(d2)], 0)
                                             : flag(pred[static_cast<std::size_t>(d2)], 1);
      }
      out.add_key(key, LaurentPoly(1));
    }
  }, big);
  return out;
}

BigInt euler_gauge(int vertices, int components) {
  BigInt g = 1;
  g <<= static_cast<mp_bitcnt_t>(vertices - components);
  return g;
}

LaurentPoly genus_poly_from_cycle_poly(const LaurentPoly& cyc, int v, int e_count, FaceMode mode, int components) {
  LaurentPoly out;
  if (cyc.is_zero()) return out;
  for (int k = cyc.low(); k <= cyc.high(); ++k) {
    const Rational c = cyc.coeff(k);
    if (c == 0) continue;
    int faces = k;
    if (mode == FaceMode::euler) {
      if (k % 2) throw std::domain_error("odd flag-cycle count");
      faces = k / 2;
    }
    const int eg = 2 * components - v + e_count - faces;
    if (eg < 0) throw std::domain_error("negative Euler genus in face element");
    if (mode == FaceMode::orientable) {
      if (eg % 2) throw std::domain_error("face element does not give a polynomial in x");
      out.add_term(c, eg / 2);
    } else {
      out.add_term(c, eg);
    }
  }
  if (mode == FaceMode::euler) {
    const Rational inv(BigInt(1), euler_gauge(v, components));
    out *= inv;
    if (!out.is_integral()) throw std::domain_error("Euler face element mass not divisible by the gauge");
  }
  return out;
}

LaurentPoly genus_poly_from_face_element(const GroupRingElem& e, int v, int e_count, FaceMode mode, int components) {
  const GroupRingElem z = face_proj(e, {});
  return genus_poly_from_cycle_poly(z.coeff_sum(), v, e_count, mode, components);
}

std::string CalibrationReport::str() const {
  std::ostringstream os;
  for (const auto& r : rows)
    os << r.name << "\tratio " << r.ratio.get_str() << "\texpected " << r.expected.get_str() << "\t"
       << (r.poly_match ? "match" : "MISMATCH") << "\n";
  os << (consistent ? "consistent" : "inconsistent") << "\n";
  return os.str();
}

CalibrationReport calibrate_signed() {
  const std::vector<std::pair<std::string, Graph>> fixtures = {
      {"B1", bouquet(1)}, {"B2", bouquet(2)}, {"P2^2", doubled_path(2)},
      {"D2", dipole(2)},  {"D3", dipole(3)},  {"D4", dipole(4)}};
  CalibrationReport rep;
  rep.consistent = true;
  for (const auto& [name, g] : fixtures) {
    const auto phi = face_element(g, FaceMode::euler);
    const auto oracle = euler_distribution_oracle(g).euler;
    CalibrationRow row;
    row.name = name;
    const LaurentPoly mass = phi.coeff_sum();
    const Rational ratio = mass.sum_coeffs() / Rational(oracle.total());
    row.ratio = ratio.get_den() == 1 ? BigInt(ratio.get_num()) : BigInt(0);
    row.expected = euler_gauge(g.vertex_count(), 1);
    row.poly_match = genus_poly_from_face_element(phi, g.vertex_count(), g.edge_count(), FaceMode::euler) == oracle.poly();
    rep.consistent = rep.consistent && row.poly_match && row.ratio == row.expected;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace gdist
