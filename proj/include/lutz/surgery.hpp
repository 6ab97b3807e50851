// Contact (+-1)-surgery diagrams on Legendrian links.
//
// Covers the Lutz-twist surgery links, linking matrices, first homology of
// the surgered manifold, the Euler class and the d2/d3 homotopy obstructions,
// topological cancellation of push-off pairs, and the sweep that checks the
// signature / c^2 identities for the full-twist link.

#pragma once

#include "lutz/exact_linalg.hpp"
#include "lutz/legendrian.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lutz {

enum class Ambient { s3, s1xs2_via_l0, abstract };

inline const char* to_string(Ambient a) {
  switch (a) {
    case Ambient::s3: return "s3";
    case Ambient::s1xs2_via_l0: return "s1xs2";
    case Ambient::abstract: return "abstract";
  }
  return "?";
}

class ContactSurgeryDiagram {
 public:
  ContactSurgeryDiagram() = default;

  /// `coefficients[i]` is the contact surgery coefficient (+1 or -1) of
  /// component i. For Ambient::s1xs2_via_l0, `ambient_component` names the
  /// (+1)-framed tb = -1 unknot that produces S^1 x S^2.
  ContactSurgeryDiagram(LegendrianLink link, std::vector<int> coefficients, Ambient ambient = Ambient::s3,
                        std::optional<KnotId> ambient_component = std::nullopt)
      : link_(std::move(link)),
        coefficients_(std::move(coefficients)),
        ambient_(ambient),
        ambient_component_(std::move(ambient_component)) {
    if (coefficients_.size() != link_.size())
      throw std::invalid_argument("diagram: need one surgery coefficient per component");
    for (int c : coefficients_)
      if (c != 1 && c != -1) throw std::invalid_argument("diagram: surgery coefficients must be +1 or -1");
    if (ambient_ == Ambient::s1xs2_via_l0) {
      if (!ambient_component_) throw std::invalid_argument("diagram: s1xs2 ambient needs a designated component");
      const std::size_t i = link_.index_of(*ambient_component_);
      if (coefficients_[i] != 1 || link_.knot(i).tb != -1)
        throw std::invalid_argument("diagram: s1xs2 component must be a (+1)-framed knot with tb = -1");
    } else if (ambient_component_) {
      throw std::invalid_argument("diagram: only the s1xs2 ambient has a designated component");
    }
  }

  std::size_t size() const noexcept { return link_.size(); }
  const LegendrianLink& link() const noexcept { return link_; }
  const std::vector<int>& coefficients() const noexcept { return coefficients_; }
  int coefficient(std::size_t i) const { return coefficients_.at(i); }
  Ambient ambient() const noexcept { return ambient_; }
  const std::optional<KnotId>& ambient_component() const noexcept { return ambient_component_; }

  /// Number of (+1) surgeries.
  std::size_t plus_one_count() const {
    return static_cast<std::size_t>(std::count(coefficients_.begin(), coefficients_.end(), 1));
  }

  friend bool operator==(const ContactSurgeryDiagram&, const ContactSurgeryDiagram&) = default;

 private:
  LegendrianLink link_;
  std::vector<int> coefficients_;
  Ambient ambient_ = Ambient::s3;
  std::optional<KnotId> ambient_component_;
};

namespace detail {

// Appends the push-off of `from` named `name`, then `zigzags` up-zigzags on it.
inline LegendrianLink push_with_up_zigzags(const LegendrianLink& link, const KnotId& from, const KnotId& name,
                                           int zigzags) {
  auto [out, child] = push_off(link, from, name);
  for (int i = 0; i < zigzags; ++i) out = stabilize(out, child, Zigzag::up);
  return out;
}

// L2 = up^2(push(L1)), L3 = push(L2), L4 = up^2(push(L3)), starting from `l1`.
inline LegendrianLink append_full_lutz_chain(LegendrianLink link, const KnotId& l1) {
  link = push_with_up_zigzags(link, l1, {"L2"}, 2);
  link = push_with_up_zigzags(link, {"L2"}, {"L3"}, 0);
  return push_with_up_zigzags(link, {"L3"}, {"L4"}, 2);
}

}  // namespace detail

/// Four-component link L1..L4 for a full Lutz twist along the transverse
/// push-off of L1 = (tb t, rot r), every component with coefficient +1.
inline ContactSurgeryDiagram full_lutz_link(std::int64_t t, std::int64_t r) {
  LegendrianLink link;
  link.add_knot({"L1"}, t, r, {});
  link = detail::append_full_lutz_chain(std::move(link), {"L1"});
  return ContactSurgeryDiagram(std::move(link), std::vector<int>(4, 1));
}

/// Two-component link L1, L2 = up^2(push(L1)) for a simple Lutz twist.
inline ContactSurgeryDiagram simple_lutz_link(std::int64_t t, std::int64_t r) {
  LegendrianLink link;
  link.add_knot({"L1"}, t, r, {});
  link = detail::push_with_up_zigzags(link, {"L1"}, {"L2"}, 2);
  return ContactSurgeryDiagram(std::move(link), std::vector<int>(2, 1));
}

/// S^1 x S^2 as (+1)-surgery on a two-cusp unknot L0, with the full-twist
/// chain built on its push-off L1.
inline ContactSurgeryDiagram s1xs2_example_diagram() {
  LegendrianLink link;
  link.add_knot({"L0"}, -1, 0, {});
  link = detail::push_with_up_zigzags(link, {"L0"}, {"L1"}, 0);
  link = detail::append_full_lutz_chain(std::move(link), {"L1"});
  return ContactSurgeryDiagram(std::move(link), std::vector<int>(5, 1), Ambient::s1xs2_via_l0, KnotId{"L0"});
}

/// Smooth surgery coefficient tb + contact coefficient.
inline std::int64_t topological_framing(const ContactSurgeryDiagram& d, std::size_t i) {
  if (i >= d.size()) throw std::out_of_range("topological_framing: component index out of range");
  return d.link().knot(i).tb + d.coefficient(i);
}

inline SymmetricIntMatrix linking_matrix(const ContactSurgeryDiagram& d) {
  const std::size_t n = d.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = i == j ? topological_framing(d, i) : d.link().linking(i, j);
  return SymmetricIntMatrix(std::move(m));
}

inline std::vector<Integer> rotation_vector(const ContactSurgeryDiagram& d) {
  std::vector<Integer> rot;
  for (const auto& k : d.link().knots()) rot.emplace_back(k.rot);
  return rot;
}

/// H1 of the surgered manifold: generated by the meridians, one relation per
/// row of the linking matrix. Generator images are the meridian classes.
inline AbelianGroupPresentation h1_presentation(const ContactSurgeryDiagram& d) {
  return cokernel(linking_matrix(d).matrix());
}

struct EulerClass {
  std::vector<Integer> element;  // in the coordinates of h1_presentation
  bool vanishes = true;
};

/// sum rot(L_i) mu_i over components not in `skip`, as a class in H1.
inline EulerClass euler_class(const ContactSurgeryDiagram& d, std::span<const KnotId> skip = {}) {
  const AbelianGroupPresentation h1 = h1_presentation(d);
  std::vector<Integer> coeffs = rotation_vector(d);
  for (const auto& id : skip) coeffs[d.link().index_of(id)] = 0;
  EulerClass e;
  e.element = h1.combination(coeffs);
  e.vanishes = AbelianGroupPresentation::is_zero(e.element);
  return e;
}

enum class D2Status { vanishes, indeterminate };

inline const char* to_string(D2Status s) { return s == D2Status::vanishes ? "vanishes" : "indeterminate"; }

/// d2 relative to a reference structure with vanishing Euler class. Since
/// 2 d2 = e - e', a zero Euler class only forces d2 = 0 without 2-torsion.
inline D2Status d2_obstruction(const ContactSurgeryDiagram& d, std::span<const KnotId> skip = {}) {
  if (!euler_class(d, skip).vanishes) return D2Status::indeterminate;
  if (h1_presentation(d).has_two_torsion()) return D2Status::indeterminate;
  return D2Status::vanishes;
}

struct D3Inputs {
  std::optional<Rational> c_squared;
  long signature = 0;
  long euler_characteristic = 0;  // one 0-handle plus one 2-handle per component
  long plus_one_surgeries = 0;
};

struct D3Result {
  std::optional<Rational> value;
  std::string reason;  // why the value is undefined; empty when defined
  D3Inputs inputs;
};

/// d3 = (c^2 - 3 sigma - 2 chi) / 4 + q for surgery on a link in (S^3, xi_st),
/// where c^2 = rot . x with (linking matrix) x = rot.
inline D3Result d3_invariant(const ContactSurgeryDiagram& d) {
  D3Result out;
  const SymmetricIntMatrix m = linking_matrix(d);
  out.inputs.signature = signature_symmetric(m);
  out.inputs.euler_characteristic = 1 + static_cast<long>(d.size());
  out.inputs.plus_one_surgeries = static_cast<long>(d.plus_one_count());

  const std::vector<Integer> rot = rotation_vector(d);
  const SolveResult x = solve_rational(m.matrix(), to_rational(rot));
  if (x.status == SolveStatus::unique) {
    Rational c2 = 0;
    for (std::size_t i = 0; i < rot.size(); ++i) c2 += Rational(rot[i]) * x.solution[i];
    out.inputs.c_squared = c2;
  }

  if (d.ambient() != Ambient::s3) {
    out.reason = std::string("ambient manifold is ") + to_string(d.ambient()) + ", not S^3";
    return out;
  }
  if (!out.inputs.c_squared) {
    out.reason = "linking matrix is degenerate";
    return out;
  }
  out.value = (*out.inputs.c_squared - 3 * out.inputs.signature - 2 * out.inputs.euler_characteristic) / 4 +
              out.inputs.plus_one_surgeries;
  return out;
}

struct HomotopyReport {
  AbelianGroupPresentation h1;
  EulerClass euler;
  D2Status d2 = D2Status::vanishes;
  D3Result d3;
};

/// Full obstruction report. The designated S^1 x S^2 component, if any, is
/// part of the ambient structure and left out of the Euler class sum.
inline HomotopyReport homotopy_report(const ContactSurgeryDiagram& d) {
  std::vector<KnotId> skip;
  if (d.ambient_component()) skip.push_back(*d.ambient_component());
  return {h1_presentation(d), euler_class(d, skip), d2_obstruction(d, skip), d3_invariant(d)};
}

/// Finds (p, c) with c = up^2(push(p)), both (+1)-framed, and the invariants
/// still in the push-off relation (p unchanged since the push-off).
inline std::optional<std::pair<std::size_t, std::size_t>> find_cancelling_pair(const ContactSurgeryDiagram& d) {
  const LegendrianLink& link = d.link();
  const std::vector<Derivation> pattern{Derivation::push_off, Derivation::up_zigzag, Derivation::up_zigzag};
  for (std::size_t c = 0; c < link.size(); ++c) {
    const LegendrianKnot& child = link.knot(c);
    if (!child.parent || child.history != pattern) continue;
    const std::size_t p = link.index_of(*child.parent);
    const LegendrianKnot& parent = link.knot(p);
    if (d.ambient_component() && (parent.id == *d.ambient_component() || child.id == *d.ambient_component()))
      continue;
    if (d.coefficient(p) != 1 || d.coefficient(c) != 1) continue;
    if (child.tb != parent.tb - 2 || child.rot != parent.rot - 2) continue;
    if (link.linking(p, c) != parent.tb) continue;
    bool rows_match = true;
    for (std::size_t x = 0; x < link.size() && rows_match; ++x)
      if (x != p && x != c && link.linking(p, x) != link.linking(c, x)) rows_match = false;
    if (rows_match) return std::pair{p, c};
  }
  return std::nullopt;
}

/// Every diagram visited while cancelling push-off pairs, input first. Each
/// step is checked to keep H1 in the same isomorphism class.
inline std::vector<ContactSurgeryDiagram> cancellation_sequence(const ContactSurgeryDiagram& d) {
  std::vector<ContactSurgeryDiagram> steps{d};
  while (auto pair = find_cancelling_pair(steps.back())) {
    const ContactSurgeryDiagram& cur = steps.back();
    const std::vector<KnotId> removed{cur.link().knot(pair->first).id, cur.link().knot(pair->second).id};
    std::vector<int> coeffs;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (i != pair->first && i != pair->second) coeffs.push_back(cur.coefficient(i));
    ContactSurgeryDiagram next(cur.link().without(removed), std::move(coeffs), cur.ambient(),
                               cur.ambient_component());
    if (!h1_presentation(next).isomorphic_to(h1_presentation(cur)))
      throw std::logic_error("cancellation changed H1 of the surgered manifold");
    steps.push_back(std::move(next));
  }
  return steps;
}

inline ContactSurgeryDiagram cancel_pushoff_pair(const ContactSurgeryDiagram& d) {
  return cancellation_sequence(d).back();
}

/// Slides L4 over L3, then L2 and L3 over L1, all subtracting.
inline SymmetricIntMatrix slide_to_lemma_form(const SymmetricIntMatrix& m) {
  if (m.size() != 4) throw std::invalid_argument("slide_to_lemma_form: expected a 4x4 linking matrix");
  SymmetricIntMatrix a = congruence_slide(m, 3, 2, -1);
  a = congruence_slide(a, 1, 0, -1);
  return congruence_slide(a, 2, 0, -1);
}

struct LemmaReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Checks, for the full-twist link: the slid matrix, its characteristic
/// polynomial x^4 - (t+1)x^3 - 4x^2 + 2(t+2)x + 1, the eigenvalue identities
/// e2 = -4 and e4 = 1, signature 0, and for every r the solution
/// (r, -2-r, -2-r, 4+r) with c^2 = -8.
inline LemmaReport verify_lemma(std::span<const std::int64_t> t_values, std::span<const std::int64_t> r_values) {
  LemmaReport report;
  auto check = [&report](bool ok, std::string what) {
    ++report.checks;
    if (!ok) report.violations.push_back(std::move(what));
  };

  for (std::int64_t t : t_values) {
    const std::string at = " at t=" + std::to_string(t);
    const SymmetricIntMatrix m = linking_matrix(full_lutz_link(t, 0));
    const SymmetricIntMatrix a = slide_to_lemma_form(m);
    const SymmetricIntMatrix expected_a{
        {t + 1, -1, -1, 0}, {-1, 0, -1, 0}, {-1, -1, 0, -1}, {0, 0, -1, 0}};
    check(a == expected_a, "slid matrix" + at);

    const IntPolynomial p = char_poly(a.matrix());
    check(p == IntPolynomial{1, 2 * (t + 2), -4, -(t + 1), 1}, "characteristic polynomial" + at);
    // x^4 - e1 x^3 + e2 x^2 - e3 x + e4
    check(p.coefficient(2) == -4, "pairwise eigenvalue sum" + at);
    check(p.coefficient(0) == 1, "eigenvalue product" + at);
    check(signature_symmetric(a) == 0, "signature of slid matrix" + at);
    check(signature_symmetric(m) == 0, "signature of linking matrix" + at);

    for (std::int64_t r : r_values) {
      const std::string atr = " at (t,r)=(" + std::to_string(t) + "," + std::to_string(r) + ")";
      const ContactSurgeryDiagram d = full_lutz_link(t, r);
      const SolveResult x = solve_rational(m.matrix(), to_rational(rotation_vector(d)));
      const RationalVector expected_x{Rational(r), Rational(-2 - r), Rational(-2 - r), Rational(4 + r)};
      check(x.status == SolveStatus::unique && x.solution == expected_x, "solution vector" + atr);
      check(d3_invariant(d).inputs.c_squared == Rational(-8), "c^2 = -8" + atr);
    }
  }
  return report;
}

}  // namespace lutz
