#include "gdist/transfer.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace gdist {

namespace {

std::vector<int> darts_of(const Graph& g, const std::vector<int>& verts, int offset = 0) {
  std::vector<int> out;
  for (int v : verts)
    for (int d : g.darts_at(v)) out.push_back(d + offset);
  std::sort(out.begin(), out.end());
  return out;
}


int vertices_at(const FamilySpec& s, int n) {
  const int k = static_cast<int>(s.phi.pairs.size());
  int v = n * s.h.vertex_count() - (s.kind == FamilyKind::circular ? n : n - 1) * k;
  if (s.kind == FamilyKind::capped) v += s.cap.vertex_count() - static_cast<int>(s.cap_glue.pairs.size());
  return v;
}

int edges_at(const FamilySpec& s, int n) {
  int e = n * s.h.edge_count();
  if (s.kind == FamilyKind::capped) e += s.cap.edge_count();
  return e;
}

PointSet keep_set(const FamilySpec& s) {
  PointSet keep = s.right;
  if (s.kind == FamilyKind::circular)
    for (int p : s.left) keep.push_back(p + 2 * s.points_per_copy());
  std::sort(keep.begin(), keep.end());
  return keep;
}

GroupRingElem completion_element(const FamilySpec& s) {
  const int nd = s.nd;
  std::vector<std::vector<int>> verts;
  if (s.kind == FamilyKind::linear) {
    for (int w : s.u2) verts.push_back(darts_of(s.h, {w}));
    return cyclic_sum_element(verts, s.mode);
  }
  if (s.kind == FamilyKind::circular) {
    for (auto [u, w] : s.phi.pairs) {
      auto ds = darts_of(s.h, {w});
      auto du = darts_of(s.h, {u}, 2 * nd);
      ds.insert(ds.end(), du.begin(), du.end());
      verts.push_back(ds);
    }
    return cyclic_sum_element(verts, s.mode);
  }
  // Capped: merge each glued U2 vertex with its cap vertex; cap darts at 3 copies.
  std::map<int, int> to_cap;
  for (auto [w, c] : s.cap_glue.pairs) to_cap[w] = c;
  std::vector<int> glued_cap;
  for (auto [w, c] : s.cap_glue.pairs) glued_cap.push_back(c);
  for (int w : s.u2) {
    auto ds = darts_of(s.h, {w});
    if (auto it = to_cap.find(w); it != to_cap.end()) {
      auto dc = darts_of(s.cap, {it->second}, 3 * nd);
      ds.insert(ds.end(), dc.begin(), dc.end());
    }
    verts.push_back(ds);
  }
  GroupRingElem c = cyclic_sum_element(verts, s.mode);
  const Graph blown = blow_up(s.cap, glued_cap);
  const int off = s.points_per_copy() * 3;
  GroupRingElem pc = relabel(face_element(blown, s.mode), [&](int p) { return p + off; });
  return ring_multiply(c, pc);
}

}  // namespace

FamilySpec make_family(const Graph& h, const GluingSpec& phi, FamilyKind kind, FaceMode mode, const Graph* cap,
                       const GluingSpec* cap_glue, const OracleOptions& opts) {
  if (!h.connected()) throw std::invalid_argument("family base graph must be connected");
  if (phi.pairs.empty()) throw std::invalid_argument("family needs a nonempty gluing");
  FamilySpec s;
  s.h = h;
  s.phi = phi;
  s.phi.self = true;
  s.kind = kind;
  s.mode = mode;
  std::set<int> a, b;
  for (auto [u, w] : phi.pairs) {
    if (u < 0 || u >= h.vertex_count() || w < 0 || w >= h.vertex_count())
      throw std::invalid_argument("gluing vertex out of range");
    if (!a.insert(u).second || !b.insert(w).second) throw std::invalid_argument("gluing is not a bijection");
    s.u1.push_back(u);
    s.u2.push_back(w);
  }
  for (int u : a)
    if (b.count(u)) throw std::invalid_argument("gluing sets U1 and U2 overlap");
  if (kind == FamilyKind::capped) {
    if (!cap || !cap_glue || cap_glue->pairs.empty()) throw std::invalid_argument("capped family needs a cap and a cap gluing");
    s.cap = *cap;
    s.cap_glue = *cap_glue;
    std::set<int> cs, ws;
    for (auto [w, c] : cap_glue->pairs) {
      if (!b.count(w)) throw std::invalid_argument("cap gluing must start at U2 vertices");
      if (c < 0 || c >= cap->vertex_count()) throw std::invalid_argument("cap vertex out of range");
      if (!cs.insert(c).second || !ws.insert(w).second) throw std::invalid_argument("cap gluing is not a bijection");
    }
  }
  s.nd = h.dart_count();
  s.left = points_of_darts(darts_of(h, s.u1), mode);
  s.right = points_of_darts(darts_of(h, s.u2), mode);
  std::vector<int> both = s.u1;
  both.insert(both.end(), s.u2.begin(), s.u2.end());
  const Graph blown = blow_up(h, both);
  const GroupRingElem phi_blown = face_element(blown, mode, opts);
  s.p_h = face_proj(phi_blown, points_of_darts(darts_of(h, both), mode));
  std::vector<std::vector<int>> glue_verts;
  for (auto [u, w] : phi.pairs) {
    auto ds = darts_of(h, {w}, s.nd);
    auto du = darts_of(h, {u});
    ds.insert(ds.end(), du.begin(), du.end());
    glue_verts.push_back(ds);
  }
  s.glue_ph = ring_multiply(cyclic_sum_element(glue_verts, mode), s.p_h);
  s.label = kind == FamilyKind::linear ? "linear" : kind == FamilyKind::circular ? "circular" : "capped";
  if (!family_graph(s, 1).connected()) throw std::invalid_argument("family graphs are not connected");
  return s;
}

TransferState initial_state(const FamilySpec& s) {
  TransferState st;
  st.n = 1;
  if (s.kind == FamilyKind::circular) {
    const int m = s.points_per_copy();
    std::set<int> left(s.left.begin(), s.left.end());
    st.a = relabel(s.p_h, [&](int p) { return left.count(p) ? p + 2 * m : p; });
    return st;
  }
  std::vector<std::vector<int>> verts;
  for (int u : s.u1) verts.push_back(darts_of(s.h, {u}));
  st.a = mul_face_proj(cyclic_sum_element(verts, s.mode), s.p_h, s.right);
  return st;
}

TransferState step_state(const FamilySpec& s, const TransferState& a) {
  const int m = s.points_per_copy();
  const PointSet keep = keep_set(s);
  if (a.a.support() != keep) throw std::invalid_argument("step_state: state support mismatch");
  GroupRingElem old = relabel(a.a, [&](int p) { return p < m ? p + m : p; });
  return TransferState{mul_face_proj(s.glue_ph, old, keep), a.n + 1};
}

LaurentPoly complete_state(const FamilySpec& s, const TransferState& a) {
  const GroupRingElem close = completion_element(s);
  const LaurentPoly cyc = mul_face_proj(close, a.a, {}).coeff_sum();
  return genus_poly_from_cycle_poly(cyc, vertices_at(s, a.n), edges_at(s, a.n), s.mode, 1);
}

SeriesPrefix family_series(const FamilySpec& s, int n) {
  if (n < 1) throw std::invalid_argument("family_series: N must be >= 1");
  const GroupRingElem close = completion_element(s);
  SeriesPrefix out;
  TransferState st = initial_state(s);
  for (int i = 1; i <= s.index_offset; ++i) st = step_state(s, st);
  while (true) {
    const LaurentPoly cyc = mul_face_proj(close, st.a, {}).coeff_sum();
    out.push_back(genus_poly_from_cycle_poly(cyc, vertices_at(s, st.n), edges_at(s, st.n), s.mode, 1));
    if (static_cast<int>(out.size()) == n) break;
    st = step_state(s, st);
  }
  return out;
}

LaurentPoly family_genus_poly(const FamilySpec& s, int n) {
  if (n < 1) throw std::invalid_argument("family index must be >= 1");
  return family_series(s, n).back();
}

LaurentPoly capped_family_poly(const FamilySpec& s, int n) {
  if (s.kind != FamilyKind::capped) throw std::invalid_argument("capped_family_poly: family is not capped");
  return family_genus_poly(s, n);
}

Graph family_graph(const FamilySpec& s, int n) {
  if (n < 1) throw std::invalid_argument("family index must be >= 1");
  n += s.index_offset;
  Graph g = s.h;
  const int nh = s.h.vertex_count();
  std::vector<int> first(static_cast<std::size_t>(nh)), last(static_cast<std::size_t>(nh));
  for (int i = 0; i < nh; ++i) first[static_cast<std::size_t>(i)] = last[static_cast<std::size_t>(i)] = i;
  for (int k = 2; k <= n; ++k) {
    GluingSpec cross;
    cross.self = false;
    for (auto [u, w] : s.phi.pairs) cross.pairs.emplace_back(last[static_cast<std::size_t>(w)], u);
    std::vector<int> vmap;
    const int ng = g.vertex_count();
    g = amalgamate(g, &s.h, cross, vmap);
    for (int i = 0; i < nh; ++i) {
      first[static_cast<std::size_t>(i)] = vmap[static_cast<std::size_t>(first[static_cast<std::size_t>(i)])];
      last[static_cast<std::size_t>(i)] = vmap[static_cast<std::size_t>(ng + i)];
    }
  }
  if (s.kind == FamilyKind::circular) {
    GluingSpec self;
    for (auto [u, w] : s.phi.pairs) self.pairs.emplace_back(first[static_cast<std::size_t>(u)], last[static_cast<std::size_t>(w)]);
    return amalgamate(g, nullptr, self);
  }
  if (s.kind == FamilyKind::capped) {
    GluingSpec cross;
    cross.self = false;
    for (auto [w, c] : s.cap_glue.pairs) cross.pairs.emplace_back(last[static_cast<std::size_t>(w)], c);
    return amalgamate(g, &s.cap, cross);
  }
  return g;
}

std::string family_index_note(const FamilySpec& s) {
  std::string what = s.kind == FamilyKind::circular ? "G_n = n copies of H glued in a ring (n = 1: H glued to itself)"
                   : s.kind == FamilyKind::linear ? "G_n = n copies of H glued in a chain"
                                                  : "G_n = n copies of H in a chain, then the cap glued to the last copy";
  if (!s.label.empty() && s.label != "linear" && s.label != "circular" && s.label != "capped")
    what = s.label + ": " + what;
  if (s.index_offset > 0) return what + "; t^n <-> G_{n+" + std::to_string(s.index_offset) + "}";
  return what + "; t^n <-> G_n";
}

FamilyGF family_rational_gf(const FamilySpec& s, int p_max, int q_max, int guard) {
  FamilyGF out;
  out.series = family_series(s, p_max + q_max + guard);
  out.pade = reconstruct_rational_gf(out.series, p_max, q_max, guard);
  out.index_note = family_index_note(s);
  return out;
}

TransferMatrix transfer_matrix(const FamilySpec& s, std::size_t max_basis) {
  const int m = s.points_per_copy();
  const PointSet keep = keep_set(s);
  TransferMatrix tm;
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::vector<int>> keys;
  std::deque<std::size_t> todo;
  auto intern = [&](const std::vector<int>& k) {
    auto [it, fresh] = index.try_emplace(k, keys.size());
    if (fresh) {
      if (keys.size() >= max_basis) throw std::runtime_error("transfer basis exceeds " + std::to_string(max_basis));
      keys.push_back(k);
      todo.push_back(it->second);
    }
    return it->second;
  };
  const TransferState a1 = initial_state(s);
  for (const auto& [k, c] : a1.a.terms()) intern(k);
  std::vector<std::vector<std::pair<std::size_t, LaurentPoly>>> rows;
  while (!todo.empty()) {
    const std::size_t i = todo.front();
    todo.pop_front();
    GroupRingElem one(keep);
    one.add_key(keys[i], LaurentPoly(1));
    const GroupRingElem img =
        mul_face_proj(s.glue_ph, relabel(one, [&](int p) { return p < m ? p + m : p; }), keep);
    if (rows.size() <= i) rows.resize(i + 1);
    for (const auto& [k, c] : img.terms()) rows[i].emplace_back(intern(k), c);
  }
  const std::size_t n = keys.size();
  rows.resize(n);
  tm.t.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, c] : rows[i]) tm.t[i][j] += c;
  for (const auto& k : keys) tm.basis.push_back(Perm{keep, k});
  const int dv = s.h.vertex_count() - static_cast<int>(s.phi.pairs.size());
  const int de = s.h.edge_count();
  const int scale = s.mode == FaceMode::euler ? 2 : 1;
  Rational gauge(1);
  if (s.mode == FaceMode::euler) gauge = Rational(BigInt(1), euler_gauge(dv, 0));
  tm.m.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!tm.t[i][j].is_zero()) tm.m[i][j] = tm.t[i][j].substitute_power(-1).shifted(scale * (de - dv)) * gauge;
  tm.at_one = eval_matrix(tm.m, Rational(1));
  tm.stochastic = tm.at_one;
  for (auto& row : tm.stochastic) {
    Rational sum(0);
    for (const auto& e : row) sum += e;
    if (sum != 0)
      for (auto& e : row) e /= sum;
  }
  tm.primitivity = primitivity_check(tm.stochastic);
  return tm;
}

BivarPoly det_one_minus_tm(const PolyMatrix& m) {
  const auto cp = charpoly(m);
  const std::size_t k = cp.size() - 1;
  std::vector<LaurentPoly> c(k + 1);
  for (std::size_t i = 0; i <= k; ++i) c[k - i] = cp[i];
  return BivarPoly(c);
}

bool divides_in_t(const BivarPoly& q_in_x, const BivarPoly& d) {
  std::vector<LaurentPoly> qc;
  for (const auto& c : q_in_x.coeffs()) qc.push_back(c.substitute_power(2));
  const BivarPoly q(qc);
  if (q.is_zero() || q[0] != LaurentPoly(1) || d.is_zero() || d[0] != LaurentPoly(1)) return false;
  const int dq = q.degree(), dd = d.degree();
  if (dq > dd) return false;
  std::vector<LaurentPoly> s(static_cast<std::size_t>(dd - dq + 1));
  for (int j = 0; j <= dd - dq; ++j) {
    LaurentPoly acc = d.coeff(j);
    for (int i = 1; i <= std::min(j, dq); ++i) acc -= q[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j - i)];
    s[static_cast<std::size_t>(j)] = acc;
  }
  return q * BivarPoly(s) == d;
}

namespace {

Graph graph_from_json(const nlohmann::json& j) {
  std::vector<std::pair<int, int>> e;
  for (const auto& p : j.at("edges")) e.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return Graph(j.at("vertices").get<int>(), e);
}

}  // namespace

FamilySpec parse_family_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.contains("name")) return named_family(j.at("name").get<std::string>(), j.value("mode", "genus") == "euler" ? FaceMode::euler : FaceMode::orientable);
    const Graph h = graph_from_json(j.at("h"));
    const GluingSpec phi = parse_gluing(j.at("glue").get<std::string>());
    const std::string kind = j.value("kind", "linear");
    const std::string mode = j.value("mode", "genus");
    if (mode != "genus" && mode != "euler") throw std::invalid_argument("family mode must be genus or euler");
    const FaceMode fm = mode == "euler" ? FaceMode::euler : FaceMode::orientable;
    FamilySpec s;
    if (kind == "linear") {
      s = make_family(h, phi, FamilyKind::linear, fm);
    } else if (kind == "circular") {
      s = make_family(h, phi, FamilyKind::circular, fm);
    } else if (kind == "capped") {
      const Graph cap = graph_from_json(j.at("cap").at("graph"));
      const GluingSpec cg = parse_gluing(j.at("cap").at("glue").get<std::string>(), false);
      s = make_family(h, phi, FamilyKind::capped, fm, &cap, &cg);
    } else {
      throw std::invalid_argument("unknown family kind: " + kind);
    }
    s.index_offset = j.value("index_offset", 0);
    if (s.index_offset < 0) throw std::invalid_argument("index_offset must be >= 0");
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("family json: ") + ex.what());
  }
}

FamilySpec named_family(const std::string& name, FaceMode mode) {
  GluingSpec phi = parse_gluing("0>1");
  FamilySpec s;
  if (name == "doubled_cycle") {
    s = make_family(dipole(2), phi, FamilyKind::circular, mode);
  } else if (name == "doubled_path") {
    s = make_family(dipole(2), phi, FamilyKind::linear, mode);
  } else if (name == "tripled_cycle") {
    s = make_family(dipole(3), phi, FamilyKind::circular, mode);
  } else if (name == "grid3" || name == "grid3_circular") {
    // Column c0-c1-c2 (vertices 0..2) with rungs c_i - r_i (r_i = 3 + i).
    const Graph h(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
    const GluingSpec g3 = parse_gluing("0>3,1>4,2>5");
    if (name == "grid3_circular") {
      s = make_family(h, g3, FamilyKind::circular, mode);
    } else {
      const Graph cap = path_graph(3);
      const GluingSpec cg = parse_gluing("3>0,4>1,5>2", false);
      s = make_family(h, g3, FamilyKind::capped, mode, &cap, &cg);
      s.index_offset = 1;
    }
  } else {
    throw std::invalid_argument("unknown family name: " + name);
  }
  s.label = name;
  return s;
}

}  // namespace gdist
