// Named checks over every exact identity of the full Lutz twist construction.

#pragma once

#include "lutz/exact_linalg.hpp"
#include "lutz/legendrian.hpp"
#include "lutz/openbook.hpp"
#include "lutz/surgery.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lutz {

struct VerificationCheck {
  std::string name;
  std::string expected;
  std::string got;
  bool passed = false;
};

class VerificationReport {
 public:
  void add(std::string name, std::string expected, std::string got) {
    const bool ok = expected == got;
    checks_.push_back({std::move(name), std::move(expected), std::move(got), ok});
  }

  const std::vector<VerificationCheck>& checks() const noexcept { return checks_; }
  std::size_t passed() const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const auto& c) { return c.passed; }));
  }
  std::size_t failed() const { return checks_.size() - passed(); }
  bool all_passed() const { return failed() == 0; }

  /// `CHECK <name> PASS|FAIL expected=<v> got=<v>` per check, then a summary.
  void print(std::ostream& out) const {
    for (const auto& c : checks_)
      out << "CHECK " << c.name << ' ' << (c.passed ? "PASS" : "FAIL") << " expected=" << c.expected
          << " got=" << c.got << '\n';
    out << "SUMMARY " << passed() << '/' << checks_.size() << " passed\n";
  }

 private:
  std::vector<VerificationCheck> checks_;
};

namespace verify_detail {

inline std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

template <typename T>
std::string tuple_string(const std::vector<T>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

inline std::string without_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

// "ok" when pred holds everywhere, otherwise the first failing case.
inline std::string sweep(const std::vector<std::int64_t>& ts, const std::vector<std::int64_t>& rs,
                         const std::function<bool(std::int64_t, std::int64_t)>& pred) {
  for (std::int64_t t : ts)
    for (std::int64_t r : rs)
      if (!pred(t, r)) return "violated_at_(t,r)=(" + std::to_string(t) + "," + std::to_string(r) + ")";
  return "ok";
}

inline std::vector<std::int64_t> component_values(const ContactSurgeryDiagram& d,
                                                  const std::function<std::int64_t(std::size_t)>& f) {
  std::vector<std::int64_t> v;
  for (std::size_t i = 0; i < d.size(); ++i) v.push_back(f(i));
  return v;
}

}  // namespace verify_detail

/// Runs every check in a fixed order. Exact equality everywhere.
inline VerificationReport verify_paper() {
  using namespace verify_detail;
  VerificationReport rep;
  const auto wide = range(-10, 10);
  const auto narrow = range(-6, 6);

  // Invariant tables of the four-component link.
  const ContactSurgeryDiagram base = full_lutz_link(-1, 0);
  auto tb_of = [](const ContactSurgeryDiagram& d) {
    return component_values(d, [&](std::size_t i) { return d.link().knot(i).tb; });
  };
  auto rot_of = [](const ContactSurgeryDiagram& d) {
    return component_values(d, [&](std::size_t i) { return d.link().knot(i).rot; });
  };
  auto tf_of = [](const ContactSurgeryDiagram& d) {
    return component_values(d, [&](std::size_t i) { return topological_framing(d, i); });
  };
  rep.add("full_lutz(-1,0).tb", "(-1,-3,-3,-5)", tuple_string(tb_of(base)));
  rep.add("full_lutz(-1,0).rot", "(0,-2,-2,-4)", tuple_string(rot_of(base)));
  rep.add("full_lutz(-1,0).tf", "(0,-2,-2,-4)", tuple_string(tf_of(base)));
  rep.add("full_lutz(3,1).tb", "(3,1,1,-1)", tuple_string(tb_of(full_lutz_link(3, 1))));
  rep.add("full_lutz.tables", "ok", sweep(wide, wide, [&](std::int64_t t, std::int64_t r) {
            const ContactSurgeryDiagram d = full_lutz_link(t, r);
            const SymmetricIntMatrix m = linking_matrix(d);
            return tb_of(d) == std::vector<std::int64_t>{t, t - 2, t - 2, t - 4} &&
                   rot_of(d) == std::vector<std::int64_t>{r, r - 2, r - 2, r - 4} &&
                   tf_of(d) == std::vector<std::int64_t>{t + 1, t - 1, t - 1, t - 3} &&
                   m == SymmetricIntMatrix{{t + 1, t, t, t},
                                           {t, t - 1, t - 2, t - 2},
                                           {t, t - 2, t - 1, t - 2},
                                           {t, t - 2, t - 2, t - 3}};
          }));
  rep.add("linking.full_lutz(-1,0)", "[[0,-1,-1,-1],[-1,-2,-3,-3],[-1,-3,-2,-3],[-1,-3,-3,-4]]",
          linking_matrix(base).matrix().to_string());

  // Handle slides and the characteristic polynomial.
  rep.add("slides.matrix_A", "ok", sweep(wide, {0}, [](std::int64_t t, std::int64_t) {
            return slide_to_lemma_form(linking_matrix(full_lutz_link(t, 0))) ==
                   SymmetricIntMatrix{{t + 1, -1, -1, 0}, {-1, 0, -1, 0}, {-1, -1, 0, -1}, {0, 0, -1, 0}};
          }));
  auto slid = [](std::int64_t t) { return slide_to_lemma_form(linking_matrix(full_lutz_link(t, 0))); };
  rep.add("charpoly.A(0)", "x^4-x^3-4x^2+4x+1", without_spaces(char_poly(slid(0).matrix()).to_string()));
  rep.add("charpoly.A(3)", "x^4-4x^3-4x^2+10x+1", without_spaces(char_poly(slid(3).matrix()).to_string()));
  {
    // Each coefficient of char_poly(A(t)) as a polynomial in t, from five samples.
    const std::vector<Integer> ts{-2, -1, 0, 1, 2};
    std::vector<IntPolynomial> polys;
    for (const auto& t : ts) polys.push_back(char_poly(slid(static_cast<std::int64_t>(t)).matrix()));
    std::ostringstream got;
    for (std::size_t k = 5; k-- > 0;) {
      std::vector<Rational> ys;
      for (const auto& p : polys) ys.emplace_back(p.coefficient(k));
      got << (k == 4 ? "" : ";") << "x^" << k << ':' << tuple_string(interpolate(ts, ys));
    }
    rep.add("charpoly.interpolated_in_t", "x^4:(1);x^3:(-1,-1);x^2:(-4);x^1:(4,2);x^0:(1)", got.str());
  }
  rep.add("charpoly.pairwise_eigen_sum == -4", "ok", sweep(wide, {0}, [&](std::int64_t t, std::int64_t) {
            return char_poly(slid(t).matrix()).coefficient(2) == -4;
          }));
  rep.add("charpoly.eigen_product == 1", "ok", sweep(wide, {0}, [&](std::int64_t t, std::int64_t) {
            return char_poly(slid(t).matrix()).coefficient(0) == 1;
          }));
  rep.add("det.linking == 1", "ok", sweep(wide, {0}, [](std::int64_t t, std::int64_t) {
            return determinant(linking_matrix(full_lutz_link(t, 0)).matrix()) == 1;
          }));

  // Signature and c^2.
  rep.add("lemma.sigma == 0", "ok", sweep(wide, {0}, [](std::int64_t t, std::int64_t) {
            return signature_symmetric(linking_matrix(full_lutz_link(t, 0))) == 0;
          }));
  rep.add("lemma.solution == (r,-2-r,-2-r,4+r)", "ok", sweep(wide, wide, [](std::int64_t t, std::int64_t r) {
            const ContactSurgeryDiagram d = full_lutz_link(t, r);
            const SolveResult x = solve_rational(linking_matrix(d).matrix(), to_rational(rotation_vector(d)));
            return x.status == SolveStatus::unique &&
                   x.solution == RationalVector{Rational(r), Rational(-2 - r), Rational(-2 - r), Rational(4 + r)};
          }));
  rep.add("lemma.c2 == -8", "ok", sweep(wide, wide, [](std::int64_t t, std::int64_t r) {
            return d3_invariant(full_lutz_link(t, r)).inputs.c_squared == Rational(-8);
          }));
  rep.add("lemma.full_sweep", "ok", [&] {
    const LemmaReport lr = verify_lemma(wide, wide);
    return lr.passed() ? std::string("ok") : without_spaces(lr.violations.front());
  }());

  // d3.
  rep.add("d3.full_lutz == -1/2", "-1/2", [&] {
    const D3Result r = d3_invariant(base);
    return r.value ? r.value->str() : "undefined";
  }());
  rep.add("d3.sweep == -1/2", "ok", sweep(narrow, narrow, [](std::int64_t t, std::int64_t r) {
            return d3_invariant(full_lutz_link(t, r)).value == Rational(-1, 2);
          }));

  // The S^1 x S^2 example.
  const ContactSurgeryDiagram s1s2 = s1xs2_example_diagram();
  rep.add("s1xs2.tb", "(-1,-1,-3,-3,-5)", tuple_string(tb_of(s1s2)));
  rep.add("s1xs2.tf", "(0,0,-2,-2,-4)", tuple_string(tf_of(s1s2)));
  rep.add("s1xs2.linking",
          "[[0,-1,-1,-1,-1],[-1,0,-1,-1,-1],[-1,-1,-2,-3,-3],[-1,-1,-3,-2,-3],[-1,-1,-3,-3,-4]]",
          linking_matrix(s1s2).matrix().to_string());
  const AbelianGroupPresentation h1 = h1_presentation(s1s2);
  rep.add("s1xs2.h1", "Z", h1.to_string());
  {
    std::string got = "unexpected_group";
    if (h1.free_rank == 1 && h1.torsion.empty()) {
      std::vector<Integer> mu;
      for (const auto& img : h1.generator_images) mu.push_back(img[0]);
      const Integer s = mu[0];
      const bool pattern = (s == 1 || s == -1) && mu[1] == s && mu[4] == s && mu[2] == -s && mu[3] == -s;
      got = pattern ? "mu0=mu1=mu4=-mu2=-mu3=+-gen" : tuple_string(mu);
    }
    rep.add("s1xs2.meridians", "mu0=mu1=mu4=-mu2=-mu3=+-gen", got);
  }
  const HomotopyReport s1s2_report = homotopy_report(s1s2);
  rep.add("s1xs2.euler == 0", "0", s1s2_report.euler.vanishes ? "0" : tuple_string(s1s2_report.euler.element));
  rep.add("s1xs2.d2", "vanishes", to_string(s1s2_report.d2));
  rep.add("s1xs2.d3", "undefined", s1s2_report.d3.value ? s1s2_report.d3.value->str() : "undefined");

  // Topological cancellation.
  auto names = [](const ContactSurgeryDiagram& d) {
    std::vector<std::string> v;
    for (const auto& k : d.link().knots()) v.push_back(k.id.name);
    return tuple_string(v);
  };
  auto h1_stable = [](const ContactSurgeryDiagram& d) {
    const auto steps = cancellation_sequence(d);
    const auto first = h1_presentation(steps.front());
    return std::all_of(steps.begin(), steps.end(),
                       [&](const auto& s) { return h1_presentation(s).isomorphic_to(first); });
  };
  rep.add("cancel.full_lutz", "()", names(cancel_pushoff_pair(full_lutz_link(-1, 0))));
  rep.add("cancel.simple_lutz", "()", names(cancel_pushoff_pair(simple_lutz_link(-1, 0))));
  rep.add("cancel.s1xs2", "(L0)", names(cancel_pushoff_pair(s1s2)));
  rep.add("cancel.h1_preserved", "ok", sweep(narrow, {0}, [&](std::int64_t t, std::int64_t) {
            return h1_stable(full_lutz_link(t, 0)) && h1_stable(s1s2);
          }));

  // Open books.
  {
    const auto [disk, trace] = full_lutz_on_binding(OpenBook(0, 1), {0});
    const auto count = [&](Handedness h) {
      return std::count_if(disk.monodromy().begin(), disk.monodromy().end(),
                           [h](const Twist& tw) { return tw.hand == h; });
    };
    std::ostringstream got;
    got << "page(" << disk.genus() << ',' << disk.boundary_count() << "),right=" << count(Handedness::right)
        << ",left=" << count(Handedness::left);
    rep.add("openbook.disk", "page(0,6),right=5,left=4", got.str());
  }
  {
    std::string got = "ok";
    for (int g = 0; g <= 3 && got == "ok"; ++g)
      for (std::size_t b = 1; b <= 4 && got == "ok"; ++b)
        for (std::size_t k = 0; k < b; ++k) {
          const OpenBook ob(g, b);
          const auto [after, trace] = full_lutz_on_binding(ob, {k});
          const std::size_t added = b == 1 ? 5 : 4;
          const bool ok = after.genus() == g && after.boundary_count() == b + added &&
                          trace.left_twists_added == 4 && trace.right_twists_added == added &&
                          ob.euler_characteristic() - after.euler_characteristic() == static_cast<long>(added);
          if (!ok) {
            got = "violated_at_(g,b,k)=(" + std::to_string(g) + "," + std::to_string(b) + "," + std::to_string(k) + ")";
            break;
          }
        }
    rep.add("openbook.corpus_genus_and_boundaries", "ok", got);
  }
  {
    const RelativeOpenBook piece = t2xI_relative_piece();
    std::ostringstream got;
    got << "genus=" << piece.page.genus() << ",boundaries=" << piece.page.boundary_count()
        << ",manifold=" << piece.count(BoundaryRole::manifold_boundary)
        << ",word=" << piece.page.monodromy().size();
    rep.add("openbook.t2xI_piece", "genus=0,boundaries=6,manifold=2,word=8", got.str());
  }
  return rep;
}

}  // namespace lutz
