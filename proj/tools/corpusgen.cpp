// Regenerates the bundled verification corpus. Every record is built
// from a constructive recipe (torus braid, rational tangle, pretzel,
// splice, split union) and must pass independent cross-checks before it
// is written:
//   - determinant |conway(2i)| against published determinant tables,
//   - |spanning-tree signature| against published signature magnitudes,
//   - Seifert genus of alternating diagrams against published genera,
//   - hand-derivable reference polynomials for the anchor records.
// chi is stored as s - c for homogeneous diagrams (Seifert's algorithm
// is genus-minimizing there). chi4 is filled only when it follows
// rigorously from the stored data: positive or negative diagrams have
// chi4 = chi, |sigma| = 2g forces the smooth genus, genus-1 knots with
// non-square determinant are not slice, and the three classically slice
// entries (6_1, 8_20, 9_46) carry chi4 = 1 explicitly.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "skein/corpus.hpp"
#include "skein/errors.hpp"
#include "skein/generators.hpp"
#include "skein/homfly.hpp"
#include "skein/laurent.hpp"
#include "skein/seifert.hpp"

using namespace skein;

namespace {

struct RecordSpec {
  std::string name;
  std::function<LinkDiagram(bool mirrored)> build;
  enum class Chirality { kAsIs, kPositiveWrithe, kSliceTop } chirality =
      Chirality::kPositiveWrithe;
  std::optional<long> det;       // published determinant
  std::optional<int> abs_sigma;  // published |signature|
  std::optional<int> genus;      // published Seifert genus (knots)
  std::optional<int> chi;        // only for non-homogeneous diagrams
  std::optional<int> chi4_slice; // explicit slice fact: chi4 = +1
  std::optional<std::string> anchor;  // hand-derived reference polynomial
  int split_components = 1;
  std::string source;
};

[[noreturn]] void die(const std::string& name, const std::string& msg) {
  std::cerr << "corpusgen: " << name << ": " << msg << "\n";
  std::exit(1);
}

long determinant(const LaurentPoly2& p) {
  Coeff a = link_determinant(p);
  if (!a.fits_slong_p()) throw Error("determinant out of range");
  return a.get_si();
}

class Builder {
public:
  void add(RecordSpec spec) { specs_.push_back(std::move(spec)); }

  std::vector<KnotRecord> run() {
    std::vector<KnotRecord> records;
    for (const RecordSpec& spec : specs_) records.push_back(process(spec));
    return records;
  }

private:
  LinkDiagram pick_chirality(const RecordSpec& spec) {
    LinkDiagram plain = spec.build(false);
    if (spec.chirality == RecordSpec::Chirality::kAsIs) return plain;
    LinkDiagram mirrored = spec.build(true);
    if (spec.chirality == RecordSpec::Chirality::kSliceTop) {
      // the chirality whose highest z-coefficient reaches v^0 (used for
      // the slice records where that equality is the point)
      for (const LinkDiagram* d : {&plain, &mirrored}) {
        LaurentPoly2 p = homfly(*d);
        if (p.highest_z_term().min_deg() == 0) return *d;
      }
      die(spec.name, "neither chirality has min_deg_v h = 0");
    }
    if (plain.writhe() >= mirrored.writhe()) return plain;
    return mirrored;
  }

  KnotRecord process(const RecordSpec& spec) {
    LinkDiagram d = pick_chirality(spec);
    LaurentPoly2 p = homfly(d);

    if (spec.anchor) {
      LaurentPoly2 want = LaurentPoly2::parse(*spec.anchor);
      if (!(p == want))
        die(spec.name, "anchor mismatch: engine " + p.str() + " vs " + *spec.anchor);
    }
    if (spec.det && determinant(p) != *spec.det)
      die(spec.name, "determinant " + std::to_string(determinant(p)) +
                         " != published " + std::to_string(*spec.det));

    DiagramStats st = d.stats();
    GraphAnalysis graph = analyze(SignedGraph::from_diagram(d));
    bool positive = true, negative = d.crossing_count() > 0;
    for (const Crossing& c : d.crossings())
      (c.sign > 0 ? negative : positive) = false;

    std::optional<int> sigma;
    bool sigma_applicable = d.is_alternating() && d.is_reduced() &&
                            d.connected_count() == 1 && d.crossing_count() > 0;
    if (sigma_applicable) {
      sigma = spanning_tree_signature(d);
      if (spec.abs_sigma && std::abs(*sigma) != *spec.abs_sigma)
        die(spec.name, "|sigma| " + std::to_string(std::abs(*sigma)) +
                           " != published " + std::to_string(*spec.abs_sigma));
    }

    std::optional<int> chi = spec.chi;
    if (graph.homogeneous) {
      chi = st.seifert_circles - st.crossings;
      if (spec.genus) {
        if (d.component_count() != 1) die(spec.name, "genus given for a link");
        if (*chi != 1 - 2 * *spec.genus)
          die(spec.name, "diagram genus " + std::to_string((1 - *chi) / 2) +
                             " != published " + std::to_string(*spec.genus));
      }
    }

    std::optional<int> chi4;
    if (spec.chi4_slice) {
      chi4 = *spec.chi4_slice;
    } else if ((positive || negative) && chi) {
      chi4 = chi;  // sharpness of the slice-Bennequin bound
    } else if (sigma && chi && *chi == 1 - std::abs(*sigma)) {
      chi4 = chi;  // |sigma|/2 meets the genus, pinning the smooth genus
    } else if (chi && *chi == -1 && d.component_count() == 1 && spec.det) {
      long r = std::lround(std::sqrt(static_cast<double>(*spec.det)));
      if (r * r != *spec.det) chi4 = -1;  // genus 1, not slice by Fox-Milnor
    }

    KnotRecord rec;
    rec.name = spec.name;
    rec.pd = d.pd_text();
    rec.alternating = d.is_alternating();
    rec.positive_diagram = positive;
    rec.homogeneous = graph.homogeneous;
    rec.chi = chi;
    rec.chi4 = chi4;
    rec.sigma = sigma;
    rec.homfly_ref = spec.anchor ? *spec.anchor : p.str();
    rec.split_components = spec.split_components;
    rec.source = spec.source + (spec.anchor ? "; ref: published anchor"
                                            : "; ref: engine-frozen");
    validate_record(rec);
    return rec;
  }

  std::vector<RecordSpec> specs_;
};

LinkDiagram trefoil(bool mirrored) {
  LinkDiagram t = gen::torus(2, 3);
  return mirrored ? t.mirror() : t;
}

std::string checks_note(const RecordSpec& s) {
  std::string out;
  if (s.det) out += " det";
  if (s.abs_sigma) out += " |sigma|";
  if (s.genus) out += " genus";
  return out.empty() ? out : ";checked:" + out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "core/data/corpus_default.csv";
  Builder b;

  auto rational_spec = [](std::string name, std::vector<int> twists, long det,
                          int abs_sigma = -1, int genus = -1) {
    RecordSpec s;
    s.name = std::move(name);
    s.build = [twists, name = s.name](bool m) {
      return gen::rational(twists, m, name);
    };
    s.det = det;
    if (abs_sigma >= 0) s.abs_sigma = abs_sigma;
    if (genus >= 0) s.genus = genus;
    std::string tw;
    for (int t : twists) tw += (tw.empty() ? "" : ",") + std::to_string(t);
    s.source = "rational C(" + tw + "); det cross-checked";
    if (abs_sigma >= 0) s.source += "; |sigma| cross-checked";
    if (genus >= 0) s.source += "; genus cross-checked";
    return s;
  };

  auto torus_spec = [](std::string name, int p, int q, long det) {
    RecordSpec s;
    s.name = std::move(name);
    s.build = [p, q, name = s.name](bool m) {
      LinkDiagram d = gen::torus(p, q, name);
      return m ? d.mirror() : d;
    };
    s.det = det;
    s.source = "torus braid (" + std::to_string(p) + "," + std::to_string(q) +
               ") closure; det cross-checked";
    return s;
  };

  // ---- unknots and unlinks ----
  {
    RecordSpec s;
    s.name = "unknot";
    s.build = [](bool) { return LinkDiagram::unlink(1, "unknot"); };
    s.chirality = RecordSpec::Chirality::kAsIs;
    s.anchor = "1";
    s.source = "crossing-free unknot";
    b.add(s);
  }
  for (int k = 2; k <= 3; ++k) {
    RecordSpec s;
    s.name = "unlink" + std::to_string(k);
    s.build = [k, name = s.name](bool) { return LinkDiagram::unlink(k, name); };
    s.chirality = RecordSpec::Chirality::kAsIs;
    s.anchor = LaurentPoly2::delta_power(k - 1).str();
    s.split_components = k;
    s.source = "crossing-free unlink; ref = delta^" + std::to_string(k - 1);
    b.add(s);
  }
  {
    RecordSpec s;
    s.name = "unknot_kink_pos";
    s.build = [](bool) { return gen::kink_unknot(+1, "unknot_kink_pos"); };
    s.chirality = RecordSpec::Chirality::kAsIs;
    s.anchor = "1";
    s.source = "one-crossing unknot, positive kink";
    b.add(s);
    s.name = "unknot_kink_neg";
    s.build = [](bool) { return gen::kink_unknot(-1, "unknot_kink_neg"); };
    s.source = "one-crossing unknot, negative kink";
    b.add(s);
  }
  {
    RecordSpec s;
    s.name = "trefoil_kinked";
    s.build = [](bool m) {
      return gen::connected_sum(trefoil(m), gen::kink_unknot(m ? -1 : +1),
                                "trefoil_kinked");
    };
    s.det = 3;
    s.anchor = "-v^4 + 2*v^2 + v^2*z^2";
    s.source = "trefoil with one extra kink; same polynomial as the trefoil";
    b.add(s);
  }

  // ---- links ----
  {
    RecordSpec s;
    s.name = "hopf_pos";
    s.build = [](bool) { return gen::torus(2, 2, "hopf_pos"); };
    s.chirality = RecordSpec::Chirality::kAsIs;
    s.det = 2;
    s.anchor = "-v^3*z^-1 + v*z^-1 + v*z";
    s.source = "torus braid (2,2); ref = one hand skein step";
    b.add(s);
    s.name = "hopf_neg";
    s.build = [](bool) { return gen::torus(2, 2).mirror().with_name("hopf_neg"); };
    s.anchor = "-v^-1*z^-1 + v^-3*z^-1 - v^-1*z";
    s.source = "mirror of hopf_pos; ref = one hand skein step";
    b.add(s);
  }
  b.add(torus_spec("t2_4", 2, 4, 4));
  b.add(torus_spec("t2_6", 2, 6, 6));
  {
    // two-crossing clasp picture of the 2-component unlink: the one
    // bundled diagram whose Seifert graph has a mixed block
    RecordSpec s;
    s.name = "unlink2_clasp";
    s.build = [](bool) {
      return LinkDiagram::parse_pd("X(1,3,2,4),X(2,3,1,4)")
          .with_name("unlink2_clasp");
    };
    s.chirality = RecordSpec::Chirality::kAsIs;
    s.det = 0;
    s.anchor = LaurentPoly2::delta_power(1).str();
    s.split_components = 2;
    s.source = "R2 clasp picture of the 2-component unlink; not homogeneous";
    b.add(s);
  }

  // ---- knots through 7 crossings (rational) ----
  {
    RecordSpec s;
    s.name = "3_1";
    s.build = trefoil;
    s.det = 3;
    s.abs_sigma = 2;
    s.genus = 1;
    s.anchor = "-v^4 + 2*v^2 + v^2*z^2";
    s.source = "torus braid (2,3); det/|sigma|/genus cross-checked";
    b.add(s);
    s.name = "3_1m";
    s.build = [](bool) { return trefoil(true).with_name("3_1m"); };
    s.chirality = RecordSpec::Chirality::kAsIs;
    s.anchor = "-v^-4 + 2*v^-2 + v^-2*z^2";
    s.source = "mirror of 3_1";
    b.add(s);
  }
  b.add(rational_spec("4_1", {2, 2}, 5, 0, 1));
  {
    RecordSpec s = torus_spec("5_1", 2, 5, 5);
    s.abs_sigma = 4;
    s.genus = 2;
    s.source += "; |sigma|/genus cross-checked";
    b.add(s);
  }
  b.add(rational_spec("5_2", {3, 2}, 7, 2, 1));
  {
    RecordSpec s = rational_spec("6_1", {4, 2}, 9, 0, 1);
    s.chirality = RecordSpec::Chirality::kSliceTop;
    s.chi4_slice = 1;  // stevedore knot, classically smoothly slice
    s.source += "; slice";
    b.add(s);
  }
  b.add(rational_spec("6_2", {3, 1, 2}, 11, 2, 2));
  b.add(rational_spec("6_3", {2, 1, 1, 2}, 13, 0, 2));
  {
    RecordSpec s = torus_spec("7_1", 2, 7, 7);
    s.abs_sigma = 6;
    s.genus = 3;
    s.source += "; |sigma|/genus cross-checked";
    b.add(s);
  }
  b.add(rational_spec("7_2", {5, 2}, 11, 2, 1));
  b.add(rational_spec("7_3", {4, 3}, 13, 4, 2));
  b.add(rational_spec("7_4", {3, 1, 3}, 15, 2, 1));
  b.add(rational_spec("7_5", {3, 2, 2}, 17, 4, 2));
  b.add(rational_spec("7_6", {2, 2, 1, 2}, 19, 2, 2));
  b.add(rational_spec("7_7", {2, 1, 1, 1, 2}, 21, 0, 2));

  // ---- 8-crossing two-bridge knots ----
  b.add(rational_spec("8_1", {6, 2}, 13, 0, 1));
  b.add(rational_spec("8_2", {5, 1, 2}, 17, 4, 3));
  b.add(rational_spec("8_3", {4, 4}, 17, 0, 1));
  b.add(rational_spec("8_4", {4, 1, 3}, 19, 2, 2));
  b.add(rational_spec("8_6", {3, 3, 2}, 23, 2, 2));
  b.add(rational_spec("8_7", {4, 1, 1, 2}, 23, 2, 3));
  {
    RecordSpec s = rational_spec("8_8", {2, 3, 1, 2}, 25, 0, 2);
    s.chi4_slice = 1;  // classically smoothly slice
    s.source += "; slice";
    b.add(s);
  }
  {
    RecordSpec s = rational_spec("8_9", {3, 1, 1, 3}, 25, 0, 3);
    s.chi4_slice = 1;  // classically smoothly slice
    s.source += "; slice";
    b.add(s);
  }
  b.add(rational_spec("8_11", {3, 2, 1, 2}, 27, 2, 2));
  b.add(rational_spec("8_12", {2, 2, 2, 2}, 29, 0, 2));
  b.add(rational_spec("8_13", {3, 1, 1, 1, 2}, 29, 0, 2));
  b.add(rational_spec("8_14", {2, 2, 1, 1, 2}, 31, 2, 2));

  // ---- pretzels and torus knots at 8 and 9 crossings ----
  {
    RecordSpec s;
    s.name = "8_5";
    s.build = [](bool m) { return gen::pretzel({3, 3, 2}, m, "8_5"); };
    s.det = 21;
    s.abs_sigma = 4;
    s.genus = 3;
    s.source = "pretzel (3,3,2); det/|sigma|/genus cross-checked";
    b.add(s);
  }
  {
    RecordSpec s = torus_spec("8_19", 3, 4, 3);
    s.source += "; positive torus knot T(3,4)";
    b.add(s);
  }
  {
    RecordSpec s;
    s.name = "8_20";
    s.build = [](bool m) { return gen::pretzel({3, -3, 2}, m, "8_20"); };
    s.chirality = RecordSpec::Chirality::kAsIs;
    s.det = 9;
    s.chi4_slice = 1;  // classically smoothly slice
    s.source = "pretzel (3,-3,2); det cross-checked; slice";
    b.add(s);
  }
  b.add(torus_spec("9_1", 2, 9, 9));
  b.add(rational_spec("9_2", {7, 2}, 15, 2, 1));
  b.add(rational_spec("9_3", {6, 3}, 19, 6, 3));
  b.add(rational_spec("9_4", {5, 4}, 21, 4, 2));
  b.add(rational_spec("9_5", {5, 1, 3}, 23, 2, 1));
  // remaining 9-crossing two-bridge knots: the determinant (numerator of
  // the reversed continued fraction) is the identity check; signature
  // and genus columns are left to the computed values
  b.add(rational_spec("9_6", {5, 2, 2}, 27));
  b.add(rational_spec("9_7", {3, 4, 2}, 29));
  b.add(rational_spec("9_8", {2, 4, 1, 2}, 31));
  b.add(rational_spec("9_9", {4, 2, 3}, 31));
  b.add(rational_spec("9_10", {3, 3, 3}, 33));
  b.add(rational_spec("9_11", {4, 1, 2, 2}, 33));
  b.add(rational_spec("9_12", {4, 2, 1, 2}, 35));
  b.add(rational_spec("9_13", {3, 2, 1, 3}, 37));
  b.add(rational_spec("9_14", {4, 1, 1, 1, 2}, 37));
  b.add(rational_spec("9_15", {2, 3, 2, 2}, 39));
  b.add(rational_spec("9_17", {2, 1, 3, 1, 2}, 39));
  b.add(rational_spec("9_18", {3, 2, 2, 2}, 41));
  b.add(rational_spec("9_19", {2, 3, 1, 1, 2}, 41));
  b.add(rational_spec("9_20", {3, 1, 2, 1, 2}, 41));
  b.add(rational_spec("9_21", {3, 1, 1, 2, 2}, 43));
  b.add(rational_spec("9_23", {2, 2, 1, 2, 2}, 45));
  b.add(rational_spec("9_26", {3, 1, 1, 1, 1, 2}, 47));
  {
    RecordSpec s = rational_spec("9_27", {2, 1, 2, 1, 1, 2}, 49);
    s.chirality = RecordSpec::Chirality::kSliceTop;
    s.chi4_slice = 1;  // classically smoothly slice
    s.source += "; slice";
    b.add(s);
  }
  b.add(rational_spec("9_31", {2, 1, 1, 1, 1, 1, 2}, 55));
  {
    RecordSpec s;
    s.name = "9_35";
    s.build = [](bool m) { return gen::pretzel({3, 3, 3}, m, "9_35"); };
    s.det = 27;
    s.abs_sigma = 2;
    s.genus = 1;
    s.source = "pretzel (3,3,3); det/|sigma|/genus cross-checked";
    b.add(s);
  }
  {
    RecordSpec s;
    s.name = "9_46";
    s.build = [](bool m) { return gen::pretzel({3, 3, -3}, m, "9_46"); };
    s.chirality = RecordSpec::Chirality::kAsIs;
    s.det = 9;
    s.chi4_slice = 1;  // classically smoothly slice
    s.source = "pretzel (3,3,-3); det cross-checked; slice";
    b.add(s);
  }

  // ---- composites ----
  {
    RecordSpec s;
    s.name = "granny";
    s.build = [](bool m) {
      return gen::connected_sum(trefoil(m), trefoil(m), "granny");
    };
    s.det = 9;
    s.abs_sigma = 4;
    s.anchor = (LaurentPoly2::parse("-v^4 + 2*v^2 + v^2*z^2") *
                LaurentPoly2::parse("-v^4 + 2*v^2 + v^2*z^2"))
                   .str();
    s.source = "trefoil # trefoil; ref = product of trefoil anchors";
    b.add(s);
  }
  {
    RecordSpec s;
    s.name = "square";
    s.build = [](bool) {
      return gen::connected_sum(trefoil(false), trefoil(true), "square");
    };
    s.chirality = RecordSpec::Chirality::kAsIs;
    s.det = 9;
    s.abs_sigma = 0;
    s.chi4_slice = 1;  // K # mirror(K) is slice
    s.anchor = (LaurentPoly2::parse("-v^4 + 2*v^2 + v^2*z^2") *
                LaurentPoly2::parse("-v^-4 + 2*v^-2 + v^-2*z^2"))
                   .str();
    s.source = "trefoil # mirror trefoil; ref = product of trefoil anchors";
    b.add(s);
  }
  {
    RecordSpec s;
    s.name = "3_1#4_1";
    s.build = [](bool m) {
      return gen::connected_sum(trefoil(m), gen::rational({2, 2}), "3_1#4_1");
    };
    s.det = 15;
    s.abs_sigma = 2;
    s.anchor = (LaurentPoly2::parse("-v^4 + 2*v^2 + v^2*z^2") *
                LaurentPoly2::parse("v^-2 - 1 + v^2 - z^2"))
                   .str();
    s.source = "trefoil # figure-eight; ref = product of anchors";
    b.add(s);
  }

  // ---- split unions ----
  {
    RecordSpec s;
    s.name = "3_1|unknot";
    s.build = [](bool m) {
      return gen::disjoint_union(trefoil(m), LinkDiagram::unlink(1),
                                 "3_1|unknot");
    };
    s.split_components = 2;
    s.anchor = (LaurentPoly2::delta_power(1) *
                LaurentPoly2::parse("-v^4 + 2*v^2 + v^2*z^2"))
                   .str();
    s.source = "trefoil split unknot; ref = delta * trefoil anchor";
    b.add(s);
  }
  {
    RecordSpec s;
    s.name = "3_1|3_1";
    s.build = [](bool m) {
      return gen::disjoint_union(trefoil(m), trefoil(m), "3_1|3_1");
    };
    s.split_components = 2;
    s.anchor = (LaurentPoly2::delta_power(1) *
                LaurentPoly2::parse("-v^4 + 2*v^2 + v^2*z^2") *
                LaurentPoly2::parse("-v^4 + 2*v^2 + v^2*z^2"))
                   .str();
    s.source = "two split trefoils; ref = delta * trefoil anchor squared";
    b.add(s);
  }
  {
    RecordSpec s;
    s.name = "hopf|unknot";
    s.build = [](bool) {
      return gen::disjoint_union(gen::torus(2, 2), LinkDiagram::unlink(1),
                                 "hopf|unknot");
    };
    s.chirality = RecordSpec::Chirality::kAsIs;
    s.split_components = 2;
    s.anchor = (LaurentPoly2::delta_power(1) *
                LaurentPoly2::parse("-v^3*z^-1 + v*z^-1 + v*z"))
                   .str();
    s.source = "positive Hopf link split unknot; ref = delta * hopf anchor";
    b.add(s);
  }

  try {
    std::vector<KnotRecord> records = b.run();
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "corpusgen: cannot write " << out_path << "\n";
      return 1;
    }
    out << corpus_to_csv(records);
    std::cerr << "corpusgen: wrote " << records.size() << " records to "
              << out_path << "\n";
    // keep the JSON mirror next to the CSV
    if (out_path.size() > 4 &&
        out_path.substr(out_path.size() - 4) == ".csv") {
      std::string json_path = out_path.substr(0, out_path.size() - 4) + ".json";
      std::ofstream jout(json_path);
      if (jout) {
        jout << corpus_to_json(records);
        std::cerr << "corpusgen: wrote JSON mirror to " << json_path << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "corpusgen: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
