#ifndef SKEIN_BOUNDS_HPP
#define SKEIN_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"
#include "skein/seifert.hpp"

namespace skein {

enum class Verdict { kEquality, kStrict, kViolated, kNotApplicable };

const char* to_string(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::kNotApplicable;
  long lhs = 0;
  long rhs = 0;

  bool holds() const {
    return verdict == Verdict::kEquality || verdict == Verdict::kStrict;
  }
};

struct MonomialWitness {
  int v_exp = 0;
  int z_exp = 0;
  Coeff coeff = 0;
};

// min_deg_v P <= -s + c + 1 for a homogeneous diagram (the diagram form
// of the genus bound; 1 - chi equals -s + c + 1 here).
CheckResult check_genus_bound(const LinkDiagram& d, const LaurentPoly2& p);

// min_deg_v P <= -s + w + 2 s_+ + 1 - 2 #sp for a homogeneous diagram;
// #sp is the diagram's connected component count (homogeneous diagrams
// are non-splittable).
CheckResult check_writhe_bound(const LinkDiagram& d, const LaurentPoly2& p);

// The sharper highest-z-degree statement: the top z coefficient h(v)
// carries a monomial at exactly the main bound's exponent, and the top
// z-degree itself equals rank(G_D) - (#sp - 1). For connected diagrams
// additionally the full monomial v^{eps_rank_sum} z^{rank} is present.
struct HighestTermCheck {
  Verdict verdict = Verdict::kNotApplicable;  // equality when min deg h == bound
  long rhs_writhe = 0;
  std::optional<MonomialWitness> h_witness;        // h coefficient at v^rhs_writhe
  std::optional<MonomialWitness> full_witness;     // (eps_rank_sum, rank) term
  int max_deg_z = 0;
  int expected_max_deg_z = 0;
  bool z_degree_ok = false;
};

HighestTermCheck check_highest_term(const LinkDiagram& d, const LaurentPoly2& p);

// min_deg_v P <= 1 - chi4; chi4 comes from corpus data and its absence
// raises MissingChi4.
CheckResult check_slice_bound(const LinkDiagram& d, const LaurentPoly2& p,
                                 std::optional<int> chi4);

// min_deg_v P + #sp - 1 <= sigma for alternating diagrams, with sigma
// computed per split component by the spanning-tree formula. A supplied
// reference signature must match exactly or SignatureMismatch is thrown.
CheckResult check_signature_bound(const LinkDiagram& d, const LaurentPoly2& p,
                                    std::optional<int> reference_sigma = {});

// Everything the verification pipeline derives for one diagram.
struct BoundsReport {
  std::string name;
  DiagramStats stats;
  GraphAnalysis graph;
  bool diagram_positive = false;
  bool diagram_negative = false;
  bool reduced = false;

  int min_deg_v = 0;
  int max_deg_z = 0;

  std::optional<long> rhs_genus;    // 1 - chi
  long rhs_diagram_genus = 0;               // -s + c + 1
  long rhs_writhe = 0;              // -s + w + 2 s_+ + 1 - 2 #sp
  std::optional<long> rhs_slice;  // 1 - chi4
  std::optional<int> sigma;          // spanning-tree signature when defined
  std::optional<int> sigma_corpus;

  Verdict genus_bound = Verdict::kNotApplicable;
  Verdict diagram_genus_bound = Verdict::kNotApplicable;
  Verdict writhe_bound = Verdict::kNotApplicable;
  Verdict highest_term = Verdict::kNotApplicable;
  Verdict slice = Verdict::kNotApplicable;
  Verdict signature = Verdict::kNotApplicable;

  std::optional<MonomialWitness> witness_full;
  std::optional<MonomialWitness> witness_h;
  // min_deg_v of the highest z term compared against 1 - chi4: the
  // weaker bound that non-positive diagrams can still attain.
  std::optional<bool> h_attains_slice;

  bool any_violation() const;
  std::string to_json() const;
};

// Inputs that come from corpus data rather than from the diagram.
struct ExternalData {
  std::optional<int> chi;
  std::optional<int> chi4;
  std::optional<int> sigma;
  std::optional<int> split_components;  // used when not homogeneous
};

BoundsReport make_bounds_report(const std::string& name, const LinkDiagram& d,
                                const LaurentPoly2& p, const ExternalData& ext);

// Equality-case table for the positivity conjecture: equality in the
// main bound (or its slice form) should occur only at positive diagrams.
// Candidates are reported, never asserted. Only reduced diagrams are
// flagged: the bound's right side is invariant under Reidemeister-I
// kinks, so a nugatory negative kink on any equality case would trigger
// a vacuous flag.
struct ConjectureRow {
  std::string name;
  bool positive_diagram = false;
  Verdict writhe_bound = Verdict::kNotApplicable;
  Verdict slice = Verdict::kNotApplicable;
  bool h_attains_slice = false;
  bool counterexample_candidate = false;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  int counterexample_candidates = 0;

  std::string to_markdown() const;
  std::string to_json() const;
};

ConjectureReport conjecture_report(const std::vector<BoundsReport>& reports);

}  // namespace skein

#endif  // SKEIN_BOUNDS_HPP
