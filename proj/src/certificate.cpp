#include "tc/certificate.hpp"

#include <chrono>
#include <ostream>

#include "tc/group_ring.hpp"

namespace tc {

namespace {

struct StageClock {
  std::vector<StageTiming>& out;
  std::string name;
  std::chrono::steady_clock::time_point start;

  StageClock(std::vector<StageTiming>& o, std::string n)
      : out(o), name(std::move(n)), start(std::chrono::steady_clock::now()) {}
  ~StageClock() {
    out.push_back({name, std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count()});
  }
};

BarChain<Pair<Dihedral>> single(const std::vector<Pair<Dihedral>>& tuple) {
  BarChain<Pair<Dihedral>> c(static_cast<int>(tuple.size()));
  c.toggle(tuple);
  return c;
}

Tensor<Dihedral> expand_reference_line(const Example3Line& line) {
  std::vector<Ring<Dihedral>> factors;
  for (const char* f : line.factors) factors.push_back(parse_ring_dihedral(f));
  return expand(factors);
}

std::string degree_tag(char s, int degree) { return std::string(1, s) + std::to_string(degree); }

BarChain<Dihedral> letter_cycle(char s, int degree) {
  return s == 'a' ? alpha_cycle(degree) : beta_cycle(degree);
}

const char* generator_pair_name(std::size_t i) {
  static const char* names[4] = {"(x,1)", "(y,1)", "(1,x)", "(1,y)"};
  return names[i];
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::not_verified: return "not_verified";
    default: return "inconclusive";
  }
}

int exit_code_for(Verdict v) { return v == Verdict::verified ? 0 : 1; }

const std::array<Example3Line, 6>& example3_reference() {
  static const Pair<Dihedral> x1{Dihedral::x(), {}};
  static const Pair<Dihedral> y2x2{{}, Dihedral::yx()};
  // nu^4 on each shuffle term, factors in dihedral normal form.
  static const std::array<Example3Line, 6> lines = {{
      {{x1, x1, y2x2, y2x2}, {"x + 1", "1 + x", "yx + 1", "1 + yx"}},
      {{x1, y2x2, x1, y2x2}, {"x + 1", "y^-1 + x", "yx + y^-1", "1 + yx"}},
      {{x1, y2x2, y2x2, x1}, {"x + 1", "y^-1 + x", "x + y^-1", "1 + x"}},
      {{y2x2, x1, x1, y2x2}, {"yx + 1", "y^-1 + yx", "yx + y^-1", "1 + yx"}},
      {{y2x2, x1, y2x2, x1}, {"yx + 1", "y^-1 + yx", "x + y^-1", "1 + x"}},
      {{y2x2, y2x2, x1, x1}, {"yx + 1", "1 + yx", "x + 1", "1 + x"}},
  }};
  return lines;
}

Wedge reference_wedge_ab() {
  Wedge w;
  const std::array<Dihedral, 3> legs{Dihedral::yx(), Dihedral::y().inverse(), Dihedral::x()};
  w.toggle(Dihedral::yx(), legs);
  w.toggle(Dihedral::x(), legs);
  return w;
}

Wedge reference_wedge_ba() {
  Wedge w;
  const std::array<Dihedral, 3> legs{Dihedral::yx(), Dihedral::y(), Dihedral::x()};
  w.toggle(Dihedral::yx(), legs);
  w.toggle(Dihedral::x(), legs);
  return w;
}

Tensor<FreeWord> yz_project(const Tensor<Dihedral>& t, int ny, int nz) {
  if (t.arity() != ny + nz)
    throw std::invalid_argument("yz_project: arity != ny + nz");
  std::vector<std::function<FreeWord(const Dihedral&)>> hs;
  for (int i = 0; i < ny; ++i) hs.emplace_back(project_to_y);
  for (int i = 0; i < nz; ++i) hs.emplace_back(project_to_z);
  return map_factors(t, hs);
}

Tensor<FreeWord> yz_basis(int ny, int nz) {
  Tensor<FreeWord> out(ny + nz);
  std::vector<FreeWord> tuple;
  for (int i = 0; i < ny; ++i) tuple.push_back(FreeWord::generator(letter_y));
  for (int i = 0; i < nz; ++i) tuple.push_back(FreeWord::generator(letter_z));
  out.toggle(tuple);
  return out;
}

CertificateReport reproduce_example3(const Example3Options& opts) {
  CertificateReport rep;
  rep.command = "example3";
  rep.n = 2;
  rep.g = 2;
  bool ok = true;

  BarChain<Pair<Dihedral>> e(4);
  {
    StageClock clock(rep.stages, "ez");
    e = ez(alpha_cycle(2), beta_cycle(2));
  }
  if (opts.corrupt == Example3Options::Corrupt::drop_term) {
    BarChain<Pair<Dihedral>> dropped(4);
    dropped.toggle(*e.terms().begin());
    e = e + dropped;
  }
  rep.ez_terms = e.size();

  {  // stage (i): the six shuffle terms, exactly as listed
    StageClock clock(rep.stages, "shuffle terms");
    BarChain<Pair<Dihedral>> expected(4);
    for (const auto& line : example3_reference())
      expected.toggle({line.tuple[0], line.tuple[1], line.tuple[2], line.tuple[3]});
    if (e != expected) {
      ok = false;
      rep.notes.push_back("stage (i): shuffle terms differ from the reference list (" +
                          std::to_string(e.size()) + " terms)");
    }
  }

  if (opts.corrupt == Example3Options::Corrupt::mutate_term) {
    auto t = *e.terms().begin();
    BarChain<Pair<Dihedral>> patch(4);
    patch.toggle(t);
    t[0] = Pair<Dihedral>{Dihedral::yx(), {}};
    patch.toggle(t);
    e = e + patch;
  }

  Tensor<Dihedral> total(4);
  {  // stage (ii): nu^4 against the frozen reference table, term for term
    StageClock clock(rep.stages, "nu^4 table");
    std::map<std::vector<Pair<Dihedral>>, Tensor<Dihedral>> table;
    for (const auto& line : example3_reference())
      table.insert({{line.tuple[0], line.tuple[1], line.tuple[2], line.tuple[3]},
                    expand_reference_line(line)});
    for (const auto& t : e.terms()) {
      const Tensor<Dihedral> value = nu_power(4, single(t));
      auto it = table.find(t);
      if (it == table.end()) {
        ok = false;
        rep.notes.push_back("stage (ii): unexpected shuffle term " + to_string(single(t)));
      } else if (value != it->second) {
        ok = false;
        rep.notes.push_back("stage (ii): nu^4 mismatch on " + to_string(single(t)));
      }
      total = total + value;
    }
  }
  rep.four_block_value = to_string(total);

  {  // stage (iii): (Y,Y,Z,Z) projection, unique survivor attribution
    StageClock clock(rep.stages, "yz projection");
    const Tensor<FreeWord> expected = yz_basis(2, 2);
    std::size_t survivors = 0;
    bool expected_origin = false;
    const std::vector<Pair<Dihedral>> origin{
        {{}, Dihedral::yx()}, {{}, Dihedral::yx()}, {Dihedral::x(), {}}, {Dihedral::x(), {}}};
    for (const auto& t : e.terms()) {
      const Tensor<FreeWord> p = yz_project(nu_power(4, single(t)), 2, 2);
      if (!p.zero()) {
        ++survivors;
        if (t == origin && p == expected) expected_origin = true;
      }
    }
    const Tensor<FreeWord> projected = yz_project(total, 2, 2);
    rep.projected_value = to_string(projected);
    if (survivors != 1 || !expected_origin || projected != expected) {
      ok = false;
      rep.notes.push_back("stage (iii): projection survivors differ from the unique "
                          "(y,y,z,z) reference");
    }
  }

  rep.verdict = ok ? Verdict::verified : Verdict::not_verified;
  return rep;
}

std::vector<ScanEntry> kunneth_scan_entries(int n) {
  if (n < 3) throw std::invalid_argument("kunneth_scan: n >= 3 required");
  std::vector<ScanEntry> out;
  for (char s : {'a', 'b'}) {
    for (char t : {'a', 'b'}) {
      for (int i = 0; i <= 4; ++i) {
        const int ld = n - i, rd = n - 4 + i;
        if (ld < 0 || rd < 0) continue;
        const auto chain = ez(letter_cycle(s, ld), letter_cycle(t, rd));
        const auto value =
            yz_project(nu_power(2 * n - 4, chain), n - 2, n - 2);
        out.push_back({s, t, ld, rd, !value.zero(), to_string(value)});
      }
    }
  }
  return out;
}

CertificateReport kunneth_scan(int n) {
  CertificateReport rep;
  rep.command = "scan";
  rep.n = n;
  rep.g = 2;
  bool ok = true;
  std::vector<ScanEntry> entries;
  {
    StageClock clock(rep.stages, "scan");
    entries = kunneth_scan_entries(n);
  }
  const Tensor<FreeWord> expected = yz_basis(n - 2, n - 2);
  for (const auto& e : entries) {
    if (!e.nonzero) continue;
    rep.kunneth_survivors.push_back(degree_tag(e.s, e.left_degree) + "*" +
                                    degree_tag(e.t, e.right_degree));
    rep.projected_value = e.value;
    const bool expected_component =
        e.left_degree == n - 2 && e.right_degree == n - 2 && e.s != e.t &&
        e.value == to_string(expected);
    if (!expected_component) {
      ok = false;
      rep.notes.push_back("unexpected surviving component " +
                          degree_tag(e.s, e.left_degree) + "*" +
                          degree_tag(e.t, e.right_degree) + " = " + e.value);
    }
  }
  if (rep.kunneth_survivors.size() != 2) {
    ok = false;
    rep.notes.push_back("expected exactly the two mixed components to survive");
  }
  rep.verdict = ok ? Verdict::verified : Verdict::not_verified;
  return rep;
}

CertificateReport certify_g2(int n, const CertifyOptions& opts) {
  if (n < 3) throw std::invalid_argument("certify_g2: n >= 3 required");
  if (opts.quotient_cap < 1)
    throw std::invalid_argument("certify_g2: quotient cap must be >= 1");
  CertificateReport rep;
  rep.command = "certify_g2";
  rep.n = n;
  rep.g = 2;

  BarChain<Pair<Dihedral>> c(2 * n);
  {
    StageClock clock(rep.stages, "ez");
    const auto gamma = gamma_cycle(n);
    c = ez(gamma, gamma);
  }
  rep.ez_terms = c.size();

  BiChain<Pair<Dihedral>> selected;
  {
    StageClock clock(rep.stages, "aw");
    const auto components = aw(c);
    for (const auto& comp : components) rep.aw_terms += comp.size();
    selected = kunneth_project(components, 4, 2 * n - 4);
  }
  rep.kunneth_terms = selected.size();

  {
    StageClock clock(rep.stages, "kunneth scan");
    const auto scan = kunneth_scan(n);
    rep.kunneth_survivors = scan.kunneth_survivors;
    rep.projected_value = scan.projected_value;
    if (scan.verdict != Verdict::verified) {
      rep.notes.push_back("kunneth scan failed");
      for (const auto& note : scan.notes) rep.notes.push_back("scan: " + note);
    }
  }

  Tensor<Dihedral> four_block(4);
  {
    StageClock clock(rep.stages, "evaluate");
    std::map<std::vector<Pair<Dihedral>>, bool> right_cache;
    std::map<std::vector<Pair<Dihedral>>, Tensor<Dihedral>> left_cache;
    for (const auto& [left, right] : selected.terms) {
      auto rc = right_cache.find(right);
      if (rc == right_cache.end()) {
        const bool nz =
            !yz_project(nu_power(2 * n - 4, single(right)), n - 2, n - 2).zero();
        rc = right_cache.insert({right, nz}).first;
      }
      if (!rc->second) continue;
      auto lc = left_cache.find(left);
      if (lc == left_cache.end())
        lc = left_cache.insert({left, nu_power(4, single(left))}).first;
      four_block = four_block + lc->second;
    }
  }
  rep.four_block_value = to_string(four_block);

  bool invariance_ok = true;
  bool s_route_nonzero = false;
  {
    StageClock clock(rep.stages, "wedge route");
    const auto route = [&](const Tensor<Dihedral>& v) {
      const Wedge w = wedge_project(v);
      if (opts.skip_head_projection) {
        WedgeCube cube;
        for (const auto& term : w.terms()) cube.toggle(term.legs);
        return cube;
      }
      return wedge_head_to_y(w);
    };
    const Wedge wedge = wedge_project(four_block);
    rep.wedge_value = to_string(wedge);
    const WedgeCube s_route = route(four_block);
    rep.s_route_value = to_string(s_route);
    s_route_nonzero = !s_route.zero();
    rep.wedge_matches_reference =
        wedge == reference_wedge_ab() + reference_wedge_ba() && s_route == s_element();
    if (!rep.wedge_matches_reference)
      rep.notes.push_back("s route: value differs from the reference element");
    const auto generators = CoinvariantSpace::default_action_generators();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const bool same = route(diagonal_action(generators[i], four_block)) == s_route;
      rep.wedge_invariance[generator_pair_name(i)] = same;
      if (!same) invariance_ok = false;
    }
    if (!invariance_ok)
      rep.notes.push_back("s route: not invariant under all diagonal generators");
  }

  {
    StageClock clock(rep.stages, "coinvariants");
    for (std::int64_t m = 1; m <= opts.quotient_cap; ++m) {
      const CoinvariantSpace space(m, 4, CoinvariantSpace::default_action_generators(),
                                   opts.dimension_cap);
      const auto residue = space.residue(finite_quotient(m, four_block));
      const bool nz = CoinvariantSpace::nonzero(residue);
      rep.residues.push_back({m, CoinvariantSpace::weight(residue), nz});
      if (nz) {
        rep.verified_m = m;
        break;
      }
    }
  }

  if (rep.verified_m > 0)
    rep.verdict = Verdict::verified;
  else if (invariance_ok && rep.wedge_matches_reference && s_route_nonzero)
    rep.verdict = Verdict::verified;
  else if (invariance_ok)
    rep.verdict = Verdict::not_verified;
  else {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back("quotient cap reached with zero residues and failed "
                        "invariance checks");
  }
  return rep;
}

CertificateReport genus_reduction_check(int n, int g) {
  if (n < 1) throw std::invalid_argument("genus_reduction_check: n >= 1 required");
  if (g < 3) throw std::invalid_argument("genus_reduction_check: g >= 3 required");
  CertificateReport rep;
  rep.command = "genus";
  rep.n = n;
  rep.g = g;
  bool ok = true;

  const auto gamma_of = [n](int genus) {
    BarChain<FreeWord> out(n);
    for (int j = 0; j < genus; ++j) out = out + power_cycle(FreeWord::generator(j), n);
    return out;
  };
  const auto project = [g](const FreeWord& w) { return project_last_generator(w, g); };

  const BarChain<FreeWord> big = gamma_of(g);
  const BarChain<FreeWord> small = gamma_of(g - 1);

  {
    StageClock clock(rep.stages, "cycles");
    if (!boundary(big).zero() || !boundary(small).zero()) {
      ok = false;
      rep.notes.push_back("top class representative is not a cycle");
    }
  }
  {
    StageClock clock(rep.stages, "projection");
    if (barchain_map(project, big) != small) {
      ok = false;
      rep.notes.push_back("projection does not carry the genus-" + std::to_string(g) +
                          " representative to the genus-" + std::to_string(g - 1) +
                          " one");
    }
  }
  {
    StageClock clock(rep.stages, "functoriality");
    const auto c = ez(big, big);
    rep.ez_terms = c.size();
    const auto mapped_chain = barchain_map(
        [&](const Pair<FreeWord>& p) {
          return Pair<FreeWord>{project(p.left), project(p.right)};
        },
        c);
    const auto route_a = map_factors_uniform(nu_power(2 * n, c), project);
    const auto route_b = nu_power(2 * n, mapped_chain);
    if (route_a != route_b) {
      ok = false;
      rep.notes.push_back("nu^{2n} does not commute with the projection at chain level");
    }
  }

  rep.verdict = ok ? Verdict::verified : Verdict::not_verified;
  return rep;
}

CertificateReport certify(int n, int g, const CertifyOptions& opts) {
  if (n < 3) throw std::invalid_argument("certify: n >= 3 required");
  if (g < 2) throw std::invalid_argument("certify: g >= 2 required");
  CertificateReport rep;
  rep.command = "certify";
  rep.n = n;
  rep.g = g;
  bool ok = true;

  for (int h = g; h >= 3; --h) {
    rep.subreports.push_back(genus_reduction_check(n, h));
    ok = ok && rep.subreports.back().verdict == Verdict::verified;
  }
  {  // genus 2 lands in the dihedral picture: a -> x, b -> yx
    StageClock clock(rep.stages, "iso");
    const auto gamma2 = alpha_cycle_free(n) + beta_cycle_free(n);
    if (barchain_map(iso_to_dihedral, gamma2) != gamma_cycle(n)) {
      ok = false;
      rep.notes.push_back("genus-2 representative does not match gamma under the "
                          "dihedral identification");
    }
  }
  rep.subreports.push_back(certify_g2(n, opts));
  ok = ok && rep.subreports.back().verdict == Verdict::verified;

  const auto& g2 = rep.subreports.back();
  rep.ez_terms = g2.ez_terms;
  rep.aw_terms = g2.aw_terms;
  rep.kunneth_terms = g2.kunneth_terms;
  rep.kunneth_survivors = g2.kunneth_survivors;
  rep.projected_value = g2.projected_value;
  rep.verified_m = g2.verified_m;

  rep.verdict = ok ? Verdict::verified
                   : (g2.verdict == Verdict::inconclusive ? Verdict::inconclusive
                                                          : Verdict::not_verified);
  return rep;
}

bool selftest(std::ostream& log) {
  bool ok = true;
  const auto check = [&](bool cond, const char* what) {
    log << (cond ? "ok      " : "MISSED  ") << what << "\n";
    ok = ok && cond;
  };

  check(reproduce_example3().verdict == Verdict::verified,
        "clean worked example verifies");

  {
    Example3Options o;
    o.corrupt = Example3Options::Corrupt::drop_term;
    const auto rep = reproduce_example3(o);
    bool at_stage_i = false;
    for (const auto& note : rep.notes)
      if (note.find("stage (i)") == 0) at_stage_i = true;
    check(rep.verdict != Verdict::verified && at_stage_i,
          "dropped shuffle term detected at the term-count stage");
  }
  {
    Example3Options o;
    o.corrupt = Example3Options::Corrupt::mutate_term;
    const auto rep = reproduce_example3(o);
    bool at_stage_ii = false;
    bool at_stage_i = false;
    for (const auto& note : rep.notes) {
      if (note.find("stage (ii)") == 0) at_stage_ii = true;
      if (note.find("stage (i):") == 0) at_stage_i = true;
    }
    check(rep.verdict != Verdict::verified && at_stage_ii && !at_stage_i,
          "mutated shuffle term detected at the nu^4 table stage");
  }
  {
    CertifyOptions o;
    o.skip_head_projection = true;
    const auto rep = certify_g2(3, o);
    check(!rep.wedge_matches_reference,
          "omitted head projection detected by the s-route reference check");
  }
  check(certify_g2(3).verdict == Verdict::verified, "clean genus-2 certificate verifies");

  return ok;
}

}  // namespace tc
