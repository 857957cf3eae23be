#pragma once
// Certificate pipelines over the infinite dihedral group: the worked
// degree-4 example, the Kunneth survivor scan, the genus-2 certificate with
// its two independent nonvanishing routes, and the genus reduction checks.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tc/bar.hpp"
#include "tc/cocycle.hpp"
#include "tc/tensor.hpp"

namespace tc {

enum class Verdict { verified, not_verified, inconclusive };

std::string to_string(Verdict v);

// Process exit code contract: 0 verified, 1 not verified or inconclusive.
int exit_code_for(Verdict v);

struct StageTiming {
  std::string name;
  double ms = 0.0;
};

struct QuotientResidue {
  std::int64_t m = 0;
  std::size_t weight = 0;
  bool nonzero = false;
};

struct CertificateReport {
  std::string command;
  int n = 0;
  int g = 0;
  Verdict verdict = Verdict::inconclusive;
  std::vector<StageTiming> stages;

  std::size_t ez_terms = 0;
  std::size_t aw_terms = 0;       // across all bidegrees
  std::size_t kunneth_terms = 0;  // in the selected bidegree
  std::vector<std::string> kunneth_survivors;
  std::string projected_value;    // YZ-block value
  std::string four_block_value;
  std::string wedge_value;
  std::string s_route_value;
  bool wedge_matches_reference = false;
  std::map<std::string, bool> wedge_invariance;
  std::vector<QuotientResidue> residues;
  std::int64_t verified_m = 0;    // 0 = no quotient certified
  std::vector<std::string> notes;
  std::vector<CertificateReport> subreports;

  std::string to_text() const;
  std::string to_json(bool include_timings = true) const;
};

// Reference data for the degree-4 worked example over D (hand-reduced
// dihedral normal forms, frozen as parseable ring text).
struct Example3Line {
  std::array<Pair<Dihedral>, 4> tuple;
  std::array<const char*, 4> factors;
};
const std::array<Example3Line, 6>& example3_reference();

// (yx - x) (x) (yx - 1)^(y^{-1} - 1)^(x - 1)
Wedge reference_wedge_ab();
// (yx - x) (x) (yx - 1)^(y - 1)^(x - 1)
Wedge reference_wedge_ba();

// First ny factors through D -> Y, last nz through D -> Z.
Tensor<FreeWord> yz_project(const Tensor<Dihedral>& t, int ny, int nz);
// The single possibly-surviving basis tensor (y,..,y,z,..,z).
Tensor<FreeWord> yz_basis(int ny, int nz);

struct Example3Options {
  // drop_term corrupts the shuffle list before the term-count stage;
  // mutate_term corrupts it between the count and the nu^4 table stage.
  enum class Corrupt { none, drop_term, mutate_term };
  Corrupt corrupt = Corrupt::none;
};

// ez(alpha_2 (x) beta_2), nu^4 against the frozen table, (Y,Y,Z,Z)
// projection with unique-survivor attribution.
CertificateReport reproduce_example3(const Example3Options& opts = {});

struct ScanEntry {
  char s = 'a';
  char t = 'a';
  int left_degree = 0;
  int right_degree = 0;
  bool nonzero = false;
  std::string value;
};

// Evaluates nu^{2n-4} with the (Y^{n-2}, Z^{n-2}) projection on every
// component s_{n-i} x t_{n-4+i}, s,t in {a,b}, i = 0..4.
std::vector<ScanEntry> kunneth_scan_entries(int n);
CertificateReport kunneth_scan(int n);

struct CertifyOptions {
  std::int64_t quotient_cap = 6;
  std::size_t dimension_cap = 1'000'000;
  bool skip_head_projection = false;  // negative control for the s route
};

// Full genus-2 pipeline at dimension n: ez(gamma_n (x) gamma_n), aw,
// bidegree (4, 2n-4), nu^4 (x) nu^{2n-4}, YZ projection of the right block,
// then both nonvanishing routes on the 4-block value.
CertificateReport certify_g2(int n, const CertifyOptions& opts = {});

// Gamma cycles for genus g, projection to genus g-1, and chain-level
// commutation of nu^{2n} with the projection on ez(Gamma (x) Gamma).
CertificateReport genus_reduction_check(int n, int g);

// Genus chain g -> g-1 -> ... -> 3, the iso step at genus 2, then the
// dihedral certificate.
CertificateReport certify(int n, int g, const CertifyOptions& opts = {});

// Positive runs plus corrupted variants; returns true iff every corruption
// is detected at the expected stage.
bool selftest(std::ostream& log);

}  // namespace tc
