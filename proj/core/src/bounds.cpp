#include "skein/bounds.hpp"

#include <sstream>

#include "json.hpp"
#include "skein/errors.hpp"

namespace skein {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kEquality: return "equality";
    case Verdict::kStrict: return "strict";
    case Verdict::kViolated: return "violated";
    case Verdict::kNotApplicable: return "n/a";
  }
  return "?";
}

namespace {

Verdict compare(long lhs, long rhs) {
  if (lhs == rhs) return Verdict::kEquality;
  return lhs < rhs ? Verdict::kStrict : Verdict::kViolated;
}

GraphAnalysis analyzed(const LinkDiagram& d) {
  return analyze(SignedGraph::from_diagram(d));
}

void require_homogeneous(const GraphAnalysis& g) {
  if (!g.homogeneous)
    throw NotHomogeneous("check requires a homogeneous diagram");
}

long main_rhs(const LinkDiagram& d) {
  DiagramStats st = d.stats();
  return -st.seifert_circles + st.writhe + 2 * st.s_plus + 1 -
         2 * d.connected_count();
}

}  // namespace

CheckResult check_genus_bound(const LinkDiagram& d, const LaurentPoly2& p) {
  require_homogeneous(analyzed(d));
  DiagramStats st = d.stats();
  long rhs = -st.seifert_circles + st.crossings + 1;
  return {compare(p.min_deg_v(), rhs), p.min_deg_v(), rhs};
}

CheckResult check_writhe_bound(const LinkDiagram& d, const LaurentPoly2& p) {
  require_homogeneous(analyzed(d));
  long rhs = main_rhs(d);
  return {compare(p.min_deg_v(), rhs), p.min_deg_v(), rhs};
}

HighestTermCheck check_highest_term(const LinkDiagram& d, const LaurentPoly2& p) {
  GraphAnalysis g = analyzed(d);
  require_homogeneous(g);

  HighestTermCheck out;
  out.rhs_writhe = main_rhs(d);
  int sp = d.connected_count();

  LaurentPoly1 h = p.highest_z_term();
  out.max_deg_z = p.max_deg_z();
  out.expected_max_deg_z = g.rank - (sp - 1);
  out.z_degree_ok = out.max_deg_z == out.expected_max_deg_z;

  Coeff at_bound = h.coefficient(static_cast<int>(out.rhs_writhe));
  if (at_bound != 0)
    out.h_witness = {static_cast<int>(out.rhs_writhe), out.max_deg_z, at_bound};

  if (sp == 1) {
    Coeff full = p.coefficient(g.eps_rank_sum(), g.rank);
    if (full != 0) out.full_witness = {g.eps_rank_sum(), g.rank, full};
  }

  bool ok = out.z_degree_ok && out.h_witness.has_value() &&
            (sp != 1 || out.full_witness.has_value());
  if (!ok)
    out.verdict = Verdict::kViolated;
  else
    out.verdict = h.min_deg() == out.rhs_writhe ? Verdict::kEquality : Verdict::kStrict;
  return out;
}

CheckResult check_slice_bound(const LinkDiagram& d, const LaurentPoly2& p,
                                 std::optional<int> chi4) {
  require_homogeneous(analyzed(d));
  if (!chi4) throw MissingChi4("slice bound needs a chi4 value from the corpus");
  long rhs = 1 - *chi4;
  return {compare(p.min_deg_v(), rhs), p.min_deg_v(), rhs};
}

CheckResult check_signature_bound(const LinkDiagram& d, const LaurentPoly2& p,
                                    std::optional<int> reference_sigma) {
  if (!d.is_alternating())
    throw NotAlternating("signature bound requires an alternating diagram");
  int sigma = 0;
  for (const LinkDiagram& part : d.split_components())
    if (part.crossing_count() > 0) sigma += spanning_tree_signature(part);
  if (reference_sigma && *reference_sigma != sigma)
    throw SignatureMismatch("computed signature " + std::to_string(sigma) +
                            " != reference " + std::to_string(*reference_sigma));
  int sp = d.connected_count();
  long lhs = p.min_deg_v() + sp - 1;
  return {compare(lhs, sigma), lhs, sigma};
}

bool BoundsReport::any_violation() const {
  for (Verdict v : {genus_bound, diagram_genus_bound, writhe_bound, highest_term,
                    slice, signature})
    if (v == Verdict::kViolated) return true;
  return false;
}

BoundsReport make_bounds_report(const std::string& name, const LinkDiagram& d,
                                const LaurentPoly2& p, const ExternalData& ext) {
  BoundsReport r;
  r.name = name;
  r.stats = d.stats();
  r.graph = analyzed(d);
  r.diagram_positive = true;
  r.diagram_negative = d.crossing_count() > 0;
  for (const Crossing& c : d.crossings()) {
    (c.sign > 0 ? r.diagram_negative : r.diagram_positive) = false;
  }
  r.reduced = d.is_reduced();
  r.min_deg_v = p.min_deg_v();
  r.max_deg_z = p.max_deg_z();
  r.sigma_corpus = ext.sigma;

  r.rhs_diagram_genus = -r.stats.seifert_circles + r.stats.crossings + 1;

  // chi: corpus value if present; for homogeneous diagrams Seifert's
  // algorithm realizes it as s - c, and a disagreement with the corpus
  // is a data error worth surfacing loudly.
  std::optional<long> chi;
  if (r.graph.homogeneous) {
    chi = r.stats.seifert_circles - r.stats.crossings;
    if (ext.chi && *ext.chi != *chi)
      throw CorpusInconsistency(name + ": stored chi " + std::to_string(*ext.chi) +
                                " != s - c = " + std::to_string(*chi) +
                                " of the homogeneous diagram");
  } else if (ext.chi) {
    chi = *ext.chi;
  }
  if (chi) r.rhs_genus = 1 - *chi;

  if (r.graph.homogeneous) {
    r.diagram_genus_bound = check_genus_bound(d, p).verdict;
    if (r.rhs_genus) r.genus_bound = compare(r.min_deg_v, *r.rhs_genus);
    CheckResult wb = check_writhe_bound(d, p);
    r.writhe_bound = wb.verdict;
    r.rhs_writhe = wb.rhs;

    HighestTermCheck h = check_highest_term(d, p);
    r.highest_term = h.verdict;
    r.witness_h = h.h_witness;
    r.witness_full = h.full_witness;

    if (ext.chi4) {
      CheckResult slice = check_slice_bound(d, p, *ext.chi4);
      r.slice = slice.verdict;
      r.rhs_slice = slice.rhs;
      r.h_attains_slice = p.highest_z_term().min_deg() == slice.rhs;
    }
  } else {
    DiagramStats st = r.stats;
    int sp = ext.split_components.value_or(1);
    r.rhs_writhe = -st.seifert_circles + st.writhe + 2 * st.s_plus + 1 - 2 * sp;
  }

  if (d.is_alternating()) {
    bool reduced_parts = true;
    int sigma = 0;
    for (const LinkDiagram& part : d.split_components()) {
      if (part.crossing_count() == 0) continue;
      if (!part.is_reduced()) {
        reduced_parts = false;
        break;
      }
      sigma += spanning_tree_signature(part);
    }
    if (reduced_parts) {
      r.sigma = sigma;
      CheckResult sig = check_signature_bound(d, p, ext.sigma);
      r.signature = sig.verdict;
    }
  }
  return r;
}

std::string BoundsReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["stats"] = {{"s", stats.seifert_circles},
                {"c", stats.crossings},
                {"w", stats.writhe},
                {"s_plus", stats.s_plus},
                {"diagram_components", stats.diagram_components},
                {"self_linking", stats.self_linking}};
  j["graph"] = nlohmann::json::parse(graph.to_json());
  j["positive_diagram"] = diagram_positive;
  j["min_deg_v"] = min_deg_v;
  j["max_deg_z"] = max_deg_z;
  auto opt_long = [](const std::optional<long>& x) {
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
  };
  auto opt_int = [](const std::optional<int>& x) {
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
  };
  j["rhs_genus"] = opt_long(rhs_genus);
  j["rhs_diagram_genus"] = rhs_diagram_genus;
  j["rhs_writhe"] = rhs_writhe;
  j["rhs_slice"] = opt_long(rhs_slice);
  j["sigma"] = opt_int(sigma);
  j["sigma_corpus"] = opt_int(sigma_corpus);
  j["verdicts"] = {{"genus_bound", to_string(genus_bound)},       {"diagram_genus_bound", to_string(diagram_genus_bound)},
                   {"writhe_bound", to_string(writhe_bound)},
                   {"highest_term", to_string(highest_term)},
                   {"slice", to_string(slice)},   {"signature", to_string(signature)}};
  if (witness_full)
    j["monomial_witness"] = {{"v", witness_full->v_exp},
                             {"z", witness_full->z_exp},
                             {"coeff", witness_full->coeff.get_str()}};
  if (witness_h)
    j["h_witness"] = {{"v", witness_h->v_exp},
                      {"z", witness_h->z_exp},
                      {"coeff", witness_h->coeff.get_str()}};
  if (h_attains_slice) j["h_attains_slice"] = *h_attains_slice;
  return j.dump();
}

ConjectureReport conjecture_report(const std::vector<BoundsReport>& reports) {
  ConjectureReport out;
  for (const BoundsReport& r : reports) {
    if (!r.graph.homogeneous) continue;
    ConjectureRow row;
    row.name = r.name;
    row.positive_diagram = r.diagram_positive;
    row.writhe_bound = r.writhe_bound;
    row.slice = r.slice;
    row.h_attains_slice = r.h_attains_slice.value_or(false);
    row.counterexample_candidate =
        r.reduced && !row.positive_diagram &&
        (row.writhe_bound == Verdict::kEquality || row.slice == Verdict::kEquality);
    out.counterexample_candidates += row.counterexample_candidate ? 1 : 0;
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string ConjectureReport::to_markdown() const {
  std::ostringstream os;
  os << "| name | positive diagram | writhe bound | slice bound | h attains slice |"
        " counterexample? |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const ConjectureRow& r : rows) {
    os << "| " << r.name << " | " << (r.positive_diagram ? "yes" : "no") << " | "
       << to_string(r.writhe_bound) << " | " << to_string(r.slice) << " | "
       << (r.h_attains_slice ? "yes" : "no") << " | "
       << (r.counterexample_candidate ? "CANDIDATE" : "") << " |\n";
  }
  return os.str();
}

std::string ConjectureReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const ConjectureRow& r : rows) {
    j.push_back({{"name", r.name},
                 {"positive_diagram", r.positive_diagram},
                 {"writhe_bound", to_string(r.writhe_bound)},
                 {"slice", to_string(r.slice)},
                 {"h_attains_slice", r.h_attains_slice},
                 {"counterexample_candidate", r.counterexample_candidate}});
  }
  return j.dump();
}

}  // namespace skein
