#include "doctest.h"
#include "skein/bounds.hpp"
#include "skein/errors.hpp"
#include "skein/generators.hpp"
#include "skein/homfly.hpp"

using skein::CheckResult;
using skein::ExternalData;
using skein::LaurentPoly2;
using skein::LinkDiagram;
using skein::Verdict;

namespace {

LinkDiagram trefoil() {
  return LinkDiagram::parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)");
}

LinkDiagram fig8() { return skein::gen::rational({2, 2}, false, "4_1"); }

LinkDiagram r2_unlink() { return LinkDiagram::parse_pd("X(1,3,2,4),X(2,3,1,4)"); }

LaurentPoly2 P(const LinkDiagram& d) { return skein::homfly(d); }

}  // namespace

TEST_CASE("seifert genus bound") {
  CheckResult t = skein::check_genus_bound(trefoil(), P(trefoil()));
  CHECK(t.verdict == Verdict::kEquality);
  CHECK(t.lhs == 2);
  CHECK(t.rhs == 2);

  CheckResult f = skein::check_genus_bound(fig8(), P(fig8()));
  CHECK(f.verdict == Verdict::kStrict);
  CHECK(f.lhs == -2);
  CHECK(f.rhs == 2);

  LinkDiagram u = LinkDiagram::unlink(1);
  CheckResult uu = skein::check_genus_bound(u, P(u));
  CHECK(uu.verdict == Verdict::kEquality);
  CHECK(uu.lhs == 0);

  CHECK_THROWS_AS(skein::check_genus_bound(r2_unlink(), P(r2_unlink())),
                  skein::NotHomogeneous);
}

TEST_CASE("main degree bound") {
  CheckResult t = skein::check_writhe_bound(trefoil(), P(trefoil()));
  CHECK(t.verdict == Verdict::kEquality);
  CHECK(t.rhs == 2);  // -2 + 3 + 2 + 1 - 2

  LinkDiagram left = trefoil().mirror();
  CheckResult l = skein::check_writhe_bound(left, P(left));
  CHECK(l.verdict == Verdict::kStrict);
  CHECK(l.lhs == -4);
  CHECK(l.rhs == -2);  // -2 - 3 + 4 + 1 - 2

  CheckResult f = skein::check_writhe_bound(fig8(), P(fig8()));
  CHECK(f.verdict == Verdict::kStrict);
  CHECK(f.lhs == -2);
  CHECK(f.rhs == 0);  // -3 + 0 + 4 + 1 - 2
}

TEST_CASE("highest z-term statement") {
  auto t = skein::check_highest_term(trefoil(), P(trefoil()));
  CHECK(t.verdict == Verdict::kEquality);
  CHECK(t.z_degree_ok);
  CHECK(t.max_deg_z == 2);
  REQUIRE(t.h_witness.has_value());
  CHECK(t.h_witness->v_exp == 2);
  CHECK(t.h_witness->coeff == 1);
  REQUIRE(t.full_witness.has_value());
  CHECK(t.full_witness->v_exp == 2);  // eps_rank_sum
  CHECK(t.full_witness->z_exp == 2);  // rank

  auto f = skein::check_highest_term(fig8(), P(fig8()));
  CHECK(f.z_degree_ok);
  REQUIRE(f.full_witness.has_value());
  CHECK(f.full_witness->v_exp == 0);
  CHECK(f.full_witness->z_exp == 2);
  CHECK(f.full_witness->coeff == -1);

  // split case: trefoil |_| unknot
  LinkDiagram split = skein::gen::disjoint_union(trefoil(), LinkDiagram::unlink(1));
  auto s = skein::check_highest_term(split, P(split));
  CHECK(s.rhs_writhe == 1);  // -3 + 3 + 4 + 1 - 4
  CHECK(s.z_degree_ok);
  CHECK(s.max_deg_z == 1);  // rank 2 minus (2 split components - 1)
  REQUIRE(s.h_witness.has_value());
  CHECK(s.h_witness->v_exp == 1);
  CHECK(s.verdict == Verdict::kEquality);  // min deg of (v - v^3) z is 1
}

TEST_CASE("slice bound") {
  CheckResult t = skein::check_slice_bound(trefoil(), P(trefoil()), -1);
  CHECK(t.verdict == Verdict::kEquality);
  CHECK(t.rhs == 2);

  LinkDiagram u = LinkDiagram::unlink(1);
  CheckResult uu = skein::check_slice_bound(u, P(u), 1);
  CHECK(uu.verdict == Verdict::kEquality);
  CHECK(uu.rhs == 0);

  CHECK_THROWS_AS(skein::check_slice_bound(trefoil(), P(trefoil()), {}),
                  skein::MissingChi4);
}

TEST_CASE("signature bound") {
  CheckResult t = skein::check_signature_bound(trefoil(), P(trefoil()), 2);
  CHECK(t.verdict == Verdict::kEquality);
  CHECK(t.lhs == 2);
  CHECK(t.rhs == 2);

  CheckResult f = skein::check_signature_bound(fig8(), P(fig8()), 0);
  CHECK(f.verdict == Verdict::kStrict);
  CHECK(f.lhs == -2);
  CHECK(f.rhs == 0);

  LinkDiagram two = skein::gen::disjoint_union(trefoil(), trefoil());
  CheckResult s = skein::check_signature_bound(two, P(two), 4);
  CHECK(s.verdict == Verdict::kEquality);
  CHECK(s.lhs == 4);  // min_deg_v 3, plus #sp - 1 = 1
  CHECK(s.rhs == 4);

  CHECK_THROWS_AS(skein::check_signature_bound(trefoil(), P(trefoil()), 7),
                  skein::SignatureMismatch);
  LinkDiagram t34 = skein::gen::torus(3, 4);
  CHECK_THROWS_AS(skein::check_signature_bound(t34, P(t34), {}),
                  skein::NotAlternating);
}

TEST_CASE("bounds report for a positive composite") {
  LinkDiagram granny = skein::gen::connected_sum(trefoil(), trefoil(), "granny");
  ExternalData ext;
  ext.chi4 = -3;
  ext.sigma = 4;
  auto r = skein::make_bounds_report("granny", granny, P(granny), ext);
  CHECK(r.diagram_positive);
  CHECK(r.graph.homogeneous);
  CHECK(r.min_deg_v == 4);
  CHECK(r.diagram_genus_bound == Verdict::kEquality);
  CHECK(r.writhe_bound == Verdict::kEquality);
  CHECK(r.slice == Verdict::kEquality);
  CHECK(r.signature == Verdict::kEquality);
  CHECK(r.sigma == 4);
  CHECK_FALSE(r.any_violation());
}

TEST_CASE("bounds report for a homogeneous non-positive composite") {
  LinkDiagram square =
      skein::gen::connected_sum(trefoil(), trefoil().mirror(), "square");
  ExternalData ext;
  ext.chi4 = 1;  // slice
  ext.sigma = 0;
  auto r = skein::make_bounds_report("square", square, P(square), ext);
  CHECK(r.graph.homogeneous);
  CHECK_FALSE(r.diagram_positive);
  CHECK(r.min_deg_v == -2);
  CHECK(r.rhs_writhe == 0);  // -3 + 0 + 4 + 1 - 2
  CHECK(r.writhe_bound == Verdict::kStrict);
  CHECK(r.slice == Verdict::kStrict);
  CHECK(r.signature == Verdict::kStrict);
  CHECK_FALSE(r.any_violation());
}

TEST_CASE("report on a non-homogeneous diagram leaves checks n/a") {
  ExternalData ext;
  ext.chi = 2;  // two disks
  auto r = skein::make_bounds_report("unlink2-clasp", r2_unlink(), P(r2_unlink()), ext);
  CHECK_FALSE(r.graph.homogeneous);
  CHECK(r.diagram_genus_bound == Verdict::kNotApplicable);
  CHECK(r.writhe_bound == Verdict::kNotApplicable);
  CHECK(r.highest_term == Verdict::kNotApplicable);
  CHECK(r.slice == Verdict::kNotApplicable);
  CHECK_FALSE(r.any_violation());
}

TEST_CASE("corpus chi inconsistent with a homogeneous diagram is loud") {
  ExternalData ext;
  ext.chi = 5;
  CHECK_THROWS_AS(skein::make_bounds_report("t", trefoil(), P(trefoil()), ext),
                  skein::CorpusInconsistency);
}

TEST_CASE("conjecture report flags equality only at positive diagrams") {
  std::vector<skein::BoundsReport> reports;
  ExternalData trefoil_ext;
  trefoil_ext.chi4 = -1;
  trefoil_ext.sigma = 2;
  reports.push_back(
      skein::make_bounds_report("3_1", trefoil(), P(trefoil()), trefoil_ext));
  ExternalData fig8_ext;
  fig8_ext.chi4 = -1;
  fig8_ext.sigma = 0;
  reports.push_back(skein::make_bounds_report("4_1", fig8(), P(fig8()), fig8_ext));

  auto table = skein::conjecture_report(reports);
  REQUIRE(table.rows.size() == 2);
  CHECK(table.counterexample_candidates == 0);
  CHECK(table.rows[0].positive_diagram);
  CHECK(table.rows[0].writhe_bound == Verdict::kEquality);
  CHECK_FALSE(table.rows[1].positive_diagram);
  CHECK(table.rows[1].writhe_bound == Verdict::kStrict);
  CHECK(table.to_markdown().find("3_1") != std::string::npos);
}
