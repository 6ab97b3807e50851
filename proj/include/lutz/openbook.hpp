// Abstract open books and the full Lutz twist along a binding component.
//
// A page is recorded by its genus and its ordered boundary circles (the
// binding). Curves on the page are symbolic: a locus tag plus a homology class.
// The monodromy is a word of right- and left-handed Dehn twists along curves.
//
// Homology classes are stored over (a1, b1, ..., ag, bg, d1, ..., db), one
// coordinate per boundary circle, and always with a zero last coordinate;
// the relation d1 + ... + db = 0 is used to eliminate db whenever a class
// would otherwise mention it. `OpenBook::reduced` gives coordinates over the
// page basis (a1, ..., bg, d1, ..., d_{b-1}).

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lutz {

struct BindingId {
  std::size_t index = 0;

  friend auto operator<=>(const BindingId&, const BindingId&) = default;
  friend bool operator==(const BindingId&, const BindingId&) = default;
};

struct CurveId {
  std::string name;

  friend auto operator<=>(const CurveId&, const CurveId&) = default;
  friend bool operator==(const CurveId&, const CurveId&) = default;
};

struct BoundaryParallel {
  BindingId binding;
  friend bool operator==(const BoundaryParallel&, const BoundaryParallel&) = default;
};

struct Encircles {
  BindingId binding;
  std::vector<BindingId> punctures;
  friend bool operator==(const Encircles&, const Encircles&) = default;
};

struct ParallelCopy {
  CurveId source;
  friend bool operator==(const ParallelCopy&, const ParallelCopy&) = default;
};

using CurveLocus = std::variant<BoundaryParallel, Encircles, ParallelCopy>;

using HomologyClass = std::vector<std::int64_t>;

struct CurveDescriptor {
  CurveId id;
  CurveLocus locus;
  HomologyClass h1_class;
  friend bool operator==(const CurveDescriptor&, const CurveDescriptor&) = default;
};

enum class Handedness { right, left };

inline const char* to_string(Handedness h) { return h == Handedness::right ? "right" : "left"; }

struct Twist {
  CurveId curve;
  Handedness hand = Handedness::right;
  friend bool operator==(const Twist&, const Twist&) = default;
};

class UnknownBinding : public std::out_of_range {
 public:
  explicit UnknownBinding(BindingId k) : std::out_of_range("unknown binding " + std::to_string(k.index)) {}
};

class UnknownCurve : public std::out_of_range {
 public:
  explicit UnknownCurve(const CurveId& c) : std::out_of_range("unknown curve '" + c.name + "'") {}
};

class OpenBook {
 public:
  OpenBook() = default;

  OpenBook(int genus, std::size_t boundaries) : genus_(genus), boundaries_(boundaries) {
    if (genus < 0) throw std::invalid_argument("open book: genus must be nonnegative");
    if (boundaries == 0) throw std::invalid_argument("open book: page needs at least one boundary circle");
  }

  int genus() const noexcept { return genus_; }
  std::size_t boundary_count() const noexcept { return boundaries_; }
  long euler_characteristic() const noexcept { return 2 - 2L * genus_ - static_cast<long>(boundaries_); }

  std::vector<BindingId> bindings() const {
    std::vector<BindingId> out;
    for (std::size_t i = 0; i < boundaries_; ++i) out.push_back({i});
    return out;
  }
  bool has_binding(BindingId k) const noexcept { return k.index < boundaries_; }
  void require_binding(BindingId k) const {
    if (!has_binding(k)) throw UnknownBinding(k);
  }

  const std::vector<CurveDescriptor>& curves() const noexcept { return curves_; }
  const std::vector<Twist>& monodromy() const noexcept { return word_; }

  bool has_curve(const CurveId& id) const { return find(id) != nullptr; }
  const CurveDescriptor& curve(const CurveId& id) const {
    if (const CurveDescriptor* c = find(id)) return *c;
    throw UnknownCurve(id);
  }

  std::size_t class_size() const noexcept { return 2 * static_cast<std::size_t>(genus_) + boundaries_; }

  /// Class of the curve parallel to boundary circle k, oriented as the boundary.
  HomologyClass boundary_class(BindingId k) const {
    require_binding(k);
    HomologyClass v(class_size(), 0);
    v[2 * static_cast<std::size_t>(genus_) + k.index] = 1;
    return normalize(std::move(v));
  }

  /// Eliminates the last boundary coordinate using d1 + ... + db = 0.
  HomologyClass normalize(HomologyClass v) const {
    if (v.size() != class_size()) throw std::invalid_argument("homology class has the wrong length");
    const std::size_t first_d = 2 * static_cast<std::size_t>(genus_);
    const std::int64_t last = v.back();
    for (std::size_t i = first_d; i < v.size(); ++i) v[i] -= last;
    return v;
  }

  /// Coordinates over (a1, ..., bg, d1, ..., d_{b-1}).
  HomologyClass reduced(const HomologyClass& v) const {
    HomologyClass n = normalize(v);
    n.pop_back();
    return n;
  }

  bool null_homologous(const HomologyClass& v) const {
    const HomologyClass r = reduced(v);
    return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
  }

  void add_curve(CurveDescriptor c) {
    if (has_curve(c.id)) throw std::invalid_argument("duplicate curve id '" + c.id.name + "'");
    check_locus(c.locus);
    c.h1_class = normalize(std::move(c.h1_class));
    curves_.push_back(std::move(c));
  }

  void add_twist(const CurveId& id, Handedness hand) {
    if (!has_curve(id)) throw UnknownCurve(id);
    word_.push_back({id, hand});
  }

  void set_monodromy(std::vector<Twist> word) {
    for (const auto& tw : word)
      if (!has_curve(tw.curve)) throw UnknownCurve(tw.curve);
    word_ = std::move(word);
  }

  /// New boundary circle, punctured next to binding `near`: outside every
  /// curve that encloses `near`, on the side of `near` for all other curves.
  BindingId add_boundary(BindingId near) {
    require_binding(near);
    const std::size_t first_d = 2 * static_cast<std::size_t>(genus_);
    for (auto& c : curves_) {
      std::size_t side = near.index;
      if (const auto inside = enclosed(c); std::count(inside.begin(), inside.end(), near.index)) {
        for (std::size_t o = 0; o < boundaries_; ++o)
          if (!std::count(inside.begin(), inside.end(), o)) {
            side = o;
            break;
          }
      }
      c.h1_class.push_back(c.h1_class[first_d + side]);
    }
    ++boundaries_;
    for (auto& c : curves_) c.h1_class = normalize(std::move(c.h1_class));
    return {boundaries_ - 1};
  }

  /// A curve id not yet on the page, `stem` itself when free.
  CurveId fresh_curve_id(const std::string& stem) const {
    CurveId id{stem};
    for (int n = 2; has_curve(id); ++n) id.name = stem + "_" + std::to_string(n);
    return id;
  }

  friend bool operator==(const OpenBook&, const OpenBook&) = default;

 private:
  /// Boundary circles on the small side of a curve, following parallel copies.
  std::vector<std::size_t> enclosed(const CurveDescriptor& c) const {
    const CurveDescriptor* base = &c;
    while (const auto* pc = std::get_if<ParallelCopy>(&base->locus)) base = find(pc->source);
    if (const auto* bp = std::get_if<BoundaryParallel>(&base->locus)) return std::vector{bp->binding.index};
    const auto& e = std::get<Encircles>(base->locus);
    std::vector<std::size_t> out{e.binding.index};
    for (BindingId p : e.punctures) out.push_back(p.index);
    return out;
  }

  const CurveDescriptor* find(const CurveId& id) const {
    auto it = std::find_if(curves_.begin(), curves_.end(), [&](const CurveDescriptor& c) { return c.id == id; });
    return it == curves_.end() ? nullptr : &*it;
  }

  void check_locus(const CurveLocus& locus) const {
    if (const auto* bp = std::get_if<BoundaryParallel>(&locus)) require_binding(bp->binding);
    if (const auto* e = std::get_if<Encircles>(&locus)) {
      require_binding(e->binding);
      for (BindingId p : e->punctures) require_binding(p);
    }
    if (const auto* pc = std::get_if<ParallelCopy>(&locus))
      if (!has_curve(pc->source)) throw UnknownCurve(pc->source);
  }

  int genus_ = 0;
  std::size_t boundaries_ = 1;
  std::vector<CurveDescriptor> curves_;
  std::vector<Twist> word_;
};

enum class BoundaryRole { binding, manifold_boundary };

inline const char* to_string(BoundaryRole r) { return r == BoundaryRole::binding ? "binding" : "manifold"; }

/// Open book of a manifold with boundary: some boundary circles of the page
/// are binding, the others trace out the boundary of the manifold.
struct RelativeOpenBook {
  OpenBook page;
  std::vector<BoundaryRole> roles;  // one per boundary circle

  bool planar() const noexcept { return page.genus() == 0; }

  std::size_t count(BoundaryRole r) const {
    return static_cast<std::size_t>(std::count(roles.begin(), roles.end(), r));
  }

  void validate() const {
    if (roles.size() != page.boundary_count())
      throw std::invalid_argument("relative open book: need one role per boundary circle");
    if (count(BoundaryRole::manifold_boundary) == 0)
      throw std::invalid_argument("relative open book: no manifold-boundary circle");
  }

  friend bool operator==(const RelativeOpenBook&, const RelativeOpenBook&) = default;
};

struct Stabilized {
  OpenBook book;
  BindingId new_binding;
  CurveId twist_curve;
};

/// Positive stabilization near binding k: a disk of the page is replaced by
/// an annulus, adding one boundary circle, and the monodromy gains a right
/// twist along a curve parallel to the new boundary.
inline Stabilized stabilize_at_binding(const OpenBook& ob, BindingId k) {
  ob.require_binding(k);
  OpenBook out = ob;
  const BindingId fresh = out.add_boundary(k);
  const CurveId id = out.fresh_curve_id("stab" + std::to_string(fresh.index));
  out.add_curve({id, BoundaryParallel{fresh}, out.boundary_class(fresh)});
  out.add_twist(id, Handedness::right);
  return {std::move(out), fresh, id};
}

struct RealizedCurve {
  OpenBook book;
  CurveId curve;
  bool stabilized = false;
};

/// Puts a push-off of binding k on the page as a curve parallel to k. That
/// curve is homologically trivial when k is the only boundary circle, so the
/// book is stabilized once first in that case.
inline RealizedCurve realize_binding_pushoff(const OpenBook& ob, BindingId k, const std::string& name = "L1") {
  ob.require_binding(k);
  RealizedCurve out{ob, {}, false};
  if (ob.null_homologous(ob.boundary_class(k))) {
    out.book = stabilize_at_binding(ob, k).book;
    out.stabilized = true;
  }
  out.curve = out.book.fresh_curve_id(name);
  out.book.add_curve({out.curve, BoundaryParallel{k}, out.book.boundary_class(k)});
  return out;
}

struct NewCurve {
  OpenBook book;
  CurveId curve;
};

/// Push-off of curve c that also runs over the two 1-handles of two fresh
/// stabilizations near binding k.
inline NewCurve pushoff_with_two_zigzags(const OpenBook& ob, const CurveId& c, BindingId k,
                                         const std::string& name = "L2") {
  const CurveDescriptor source = ob.curve(c);
  ob.require_binding(k);
  Stabilized s1 = stabilize_at_binding(ob, k);
  Stabilized s2 = stabilize_at_binding(s1.book, k);
  OpenBook out = std::move(s2.book);

  // Punctures already enclosed by the source (followed through parallel copies).
  std::vector<BindingId> punctures;
  const CurveDescriptor* walk = &source;
  while (const auto* pc = std::get_if<ParallelCopy>(&walk->locus)) walk = &out.curve(pc->source);
  if (const auto* e = std::get_if<Encircles>(&walk->locus); e && e->binding == k) punctures = e->punctures;
  punctures.push_back(s1.new_binding);
  punctures.push_back(s2.new_binding);

  HomologyClass cls = out.curve(c).h1_class;
  const HomologyClass d1 = out.boundary_class(s1.new_binding);
  const HomologyClass d2 = out.boundary_class(s2.new_binding);
  for (std::size_t i = 0; i < cls.size(); ++i) cls[i] += d1[i] + d2[i];

  const CurveId id = out.fresh_curve_id(name);
  out.add_curve({id, Encircles{k, std::move(punctures)}, std::move(cls)});
  return {std::move(out), id};
}

/// Parallel copy of c on the same page.
inline NewCurve parallel_copy(const OpenBook& ob, const CurveId& c, const std::string& name = "L3") {
  OpenBook out = ob;
  const CurveId id = out.fresh_curve_id(name);
  out.add_curve({id, ParallelCopy{c}, ob.curve(c).h1_class});
  return {std::move(out), id};
}

struct LutzTrace {
  CurveId l1, l2, l3, l4;
  std::vector<CurveId> stabilization_curves;
  bool initial_stabilization = false;
  int genus_before = 0;
  int genus_after = 0;
  std::size_t boundaries_before = 0;
  std::size_t boundaries_after = 0;
  std::size_t right_twists_added = 0;
  std::size_t left_twists_added = 0;
};

/// Full Lutz twist along binding k: realize L1..L4 on a page (stabilizing as
/// needed), then compose the monodromy with a left twist along each L_i.
inline std::pair<OpenBook, LutzTrace> full_lutz_on_binding(const OpenBook& ob, BindingId k) {
  ob.require_binding(k);
  LutzTrace trace;
  trace.genus_before = ob.genus();
  trace.boundaries_before = ob.boundary_count();

  RealizedCurve r1 = realize_binding_pushoff(ob, k);
  trace.initial_stabilization = r1.stabilized;
  NewCurve c2 = pushoff_with_two_zigzags(r1.book, r1.curve, k, "L2");
  NewCurve c3 = parallel_copy(c2.book, c2.curve, "L3");
  NewCurve c4 = pushoff_with_two_zigzags(c3.book, c3.curve, k, "L4");
  OpenBook out = std::move(c4.book);

  trace.l1 = r1.curve;
  trace.l2 = c2.curve;
  trace.l3 = c3.curve;
  trace.l4 = c4.curve;
  for (std::size_t i = ob.monodromy().size(); i < out.monodromy().size(); ++i)
    trace.stabilization_curves.push_back(out.monodromy()[i].curve);
  trace.right_twists_added = trace.stabilization_curves.size();

  for (const CurveId& l : {trace.l1, trace.l2, trace.l3, trace.l4}) out.add_twist(l, Handedness::left);
  trace.left_twists_added = 4;

  trace.genus_after = out.genus();
  trace.boundaries_after = out.boundary_count();
  if (trace.genus_after != trace.genus_before) throw std::logic_error("full Lutz twist changed the page genus");
  return {std::move(out), std::move(trace)};
}

/// The annulus open book: two boundary circles, one right twist along the core.
inline OpenBook annulus_open_book() {
  OpenBook ob(0, 2);
  ob.add_curve({{"core"}, BoundaryParallel{{1}}, ob.boundary_class({1})});
  ob.add_twist({"core"}, Handedness::right);
  return ob;
}

/// Relative open book of the twisted T^2 x I layer: the part of the annulus
/// model created by the full Lutz twist along binding 0. The two original
/// annulus boundaries bound the layer; the four new circles are binding.
inline RelativeOpenBook t2xI_relative_piece() {
  const OpenBook model = annulus_open_book();
  const auto [after, trace] = full_lutz_on_binding(model, {0});

  const std::vector<Twist> delta(after.monodromy().begin() + static_cast<std::ptrdiff_t>(model.monodromy().size()),
                                 after.monodromy().end());
  OpenBook page(after.genus(), after.boundary_count());
  for (const CurveDescriptor& c : after.curves()) {
    const bool used = std::any_of(delta.begin(), delta.end(), [&](const Twist& t) { return t.curve == c.id; });
    if (used) page.add_curve(c);
  }
  page.set_monodromy(delta);

  RelativeOpenBook piece{std::move(page), {}};
  for (std::size_t i = 0; i < after.boundary_count(); ++i)
    piece.roles.push_back(i < model.boundary_count() ? BoundaryRole::manifold_boundary : BoundaryRole::binding);
  piece.validate();
  return piece;
}

/// Free reduction of the monodromy word: cancels adjacent twists along the
/// same curve with opposite handedness.
inline OpenBook word_reduce(const OpenBook& ob) {
  std::vector<Twist> stack;
  for (const Twist& t : ob.monodromy()) {
    if (!stack.empty() && stack.back().curve == t.curve && stack.back().hand != t.hand)
      stack.pop_back();
    else
      stack.push_back(t);
  }
  OpenBook out = ob;
  out.set_monodromy(std::move(stack));
  return out;
}

}  // namespace lutz
