#include "skein/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"
#include "skein/errors.hpp"
#include "skein/homfly.hpp"

namespace skein {

namespace {

// v^-1 P(D+) - v P(D-) = z P(D0) at one crossing, exactly.
bool skein_relation_holds(const LinkDiagram& d, int crossing,
                          const LaurentPoly2& p_of_d, const HomflyOptions& opt) {
  LinkDiagram switched = d.resolved(crossing, ResolveMode::kSwitch);
  LinkDiagram smoothed = d.resolved(crossing, ResolveMode::kSmooth);
  LaurentPoly2 p_switched = homfly(switched, opt);
  LaurentPoly2 p_smoothed = homfly(smoothed, opt);
  const LaurentPoly2& p_pos = d.crossings()[crossing].sign > 0 ? p_of_d : p_switched;
  const LaurentPoly2& p_neg = d.crossings()[crossing].sign > 0 ? p_switched : p_of_d;
  return p_pos.mono_mul(-1, 0) - p_neg.mono_mul(1, 0) == p_smoothed.mono_mul(0, 1);
}

void tally(Verdict v, VerificationSummary& s) {
  switch (v) {
    case Verdict::kEquality: ++s.equalities; break;
    case Verdict::kStrict: ++s.strict; break;
    case Verdict::kViolated: ++s.violated; break;
    case Verdict::kNotApplicable: ++s.not_applicable; break;
  }
}

}  // namespace

VerificationSummary run_verification(const std::vector<KnotRecord>& corpus,
                                     const VerifyOptions& opt) {
  VerificationSummary summary;
  summary.seed = opt.seed;
  HomflyOptions hopt{opt.crossing_cap, true};

  for (const KnotRecord& rec : corpus) {
    RecordOutcome out;
    out.name = rec.name;
    const LinkDiagram& d = rec.diagram;

    if (d.crossing_count() > opt.crossing_cap) {
      out.skip_reason = "CrossingCapExceeded: " +
                        std::to_string(d.crossing_count()) + " crossings > cap " +
                        std::to_string(opt.crossing_cap);
      ++summary.skipped;
      summary.outcomes.push_back(std::move(out));
      continue;
    }

    try {
      LaurentPoly2 p = homfly(d, hopt);

      if (rec.homfly_ref) {
        LaurentPoly2 ref = LaurentPoly2::parse(*rec.homfly_ref);
        if (!(ref == p))
          out.problems.push_back("homfly mismatch: computed " + p.str() +
                                 ", reference " + ref.str());
      }

      if (opt.check_skein_relation) {
        std::vector<int> order(d.crossing_count());
        std::iota(order.begin(), order.end(), 0);
        if (opt.seed != 0) {
          std::mt19937 rng(opt.seed);
          std::shuffle(order.begin(), order.end(), rng);
        }
        for (int i : order)
          if (!skein_relation_holds(d, i, p, hopt)) {
            out.problems.push_back("skein relation fails at crossing " +
                                   std::to_string(i));
          }
      }

      ExternalData ext{rec.chi, rec.chi4, rec.sigma,
                       rec.split_components > 1
                           ? std::optional<int>(rec.split_components)
                           : std::nullopt};
      BoundsReport report = make_bounds_report(rec.name, d, p, ext);

      // Chain consistency: main rhs <= 1 - chi4 <= 1 - chi whenever defined.
      if (report.graph.homogeneous && report.rhs_slice &&
          report.rhs_writhe > *report.rhs_slice)
        out.problems.push_back("bound chain broken: rhs_writhe > rhs_slice");
      if (report.rhs_slice && report.rhs_genus && *report.rhs_slice > *report.rhs_genus)
        out.problems.push_back("bound chain broken: rhs_slice > rhs_genus");

      if (report.any_violation())
        out.problems.push_back("bound violation (see verdicts)");
      out.report = std::move(report);
      ++summary.checked;
    } catch (const Error& e) {
      out.problems.push_back(std::string("error: ") + e.what());
    }
    summary.outcomes.push_back(std::move(out));
  }

  std::sort(summary.outcomes.begin(), summary.outcomes.end(),
            [](const RecordOutcome& a, const RecordOutcome& b) {
              return a.name < b.name;
            });

  std::vector<BoundsReport> reports;
  for (const RecordOutcome& out : summary.outcomes) {
    summary.problem_count += static_cast<int>(out.problems.size());
    if (out.report) {
      reports.push_back(*out.report);
      for (Verdict v : {out.report->genus_bound, out.report->diagram_genus_bound, out.report->writhe_bound,
                        out.report->highest_term, out.report->slice,
                        out.report->signature})
        tally(v, summary);
    }
  }
  summary.conjecture = conjecture_report(reports);
  return summary;
}

std::string VerificationSummary::one_line() const {
  std::ostringstream os;
  os << "records checked: " << checked << ", skipped: " << skipped
     << "; verdicts: " << equalities << " equality, " << strict << " strict, "
     << violated << " violated, " << not_applicable
     << " n/a; problems: " << problem_count
     << "; conjecture counterexample candidates: "
     << conjecture.counterexample_candidates;
  return os.str();
}

std::string VerificationSummary::to_json() const {
  nlohmann::json j;
  j["summary"] = {{"checked", checked},
                  {"skipped", skipped},
                  {"equalities", equalities},
                  {"strict", strict},
                  {"violated", violated},
                  {"not_applicable", not_applicable},
                  {"problems", problem_count},
                  {"seed", seed},
                  {"ok", ok()}};
  j["records"] = nlohmann::json::array();
  for (const RecordOutcome& out : outcomes) {
    nlohmann::json e;
    e["name"] = out.name;
    if (out.skipped()) e["skipped"] = out.skip_reason;
    if (!out.problems.empty()) e["problems"] = out.problems;
    if (out.report) e["report"] = nlohmann::json::parse(out.report->to_json());
    j["records"].push_back(e);
  }
  j["conjecture"] = nlohmann::json::parse(conjecture.to_json());
  return j.dump(2);
}

std::string VerificationSummary::to_markdown() const {
  std::ostringstream os;
  os << "# Verification report\n\n" << one_line() << "\n\n";
  os << "| name | s | c | w | s+ | min_deg_v | max_deg_z | rhs_diagram_genus | rhs_writhe |"
        " rhs_slice | sigma | diagram_genus | writhe | highest_term | slice | signature |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const RecordOutcome& out : outcomes) {
    if (!out.report) {
      os << "| " << out.name << " | skipped: " << out.skip_reason
         << " |||||||||||||||\n";
      continue;
    }
    const BoundsReport& r = *out.report;
    auto opt_long = [](const std::optional<long>& v) {
      return v ? std::to_string(*v) : std::string("-");
    };
    auto opt_int = [](const std::optional<int>& v) {
      return v ? std::to_string(*v) : std::string("-");
    };
    os << "| " << r.name << " | " << r.stats.seifert_circles << " | "
       << r.stats.crossings << " | " << r.stats.writhe << " | " << r.stats.s_plus
       << " | " << r.min_deg_v << " | " << r.max_deg_z << " | " << r.rhs_diagram_genus
       << " | " << r.rhs_writhe << " | " << opt_long(r.rhs_slice) << " | "
       << opt_int(r.sigma) << " | " << to_string(r.diagram_genus_bound) << " | "
       << to_string(r.writhe_bound) << " | " << to_string(r.highest_term) << " | "
       << to_string(r.slice) << " | " << to_string(r.signature) << " |\n";
  }
  os << "\n## Positivity conjecture equality cases\n\n" << conjecture.to_markdown();
  return os.str();
}

}  // namespace skein
