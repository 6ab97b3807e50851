// Legendrian knots and links as carriers of classical invariants.
//
// Knots are not embedded curves here. A knot is its Thurston-Bennequin
// number, its rotation number, and a record of how it was derived
// (push-off, zigzags). A link adds the symmetric table of linking numbers.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lutz {

struct KnotId {
  std::string name;

  friend auto operator<=>(const KnotId&, const KnotId&) = default;
  friend bool operator==(const KnotId&, const KnotId&) = default;
};

enum class Zigzag { up, down };

enum class Derivation { push_off, up_zigzag, down_zigzag };

inline const char* to_string(Derivation d) {
  switch (d) {
    case Derivation::push_off: return "push-off";
    case Derivation::up_zigzag: return "up-zigzag";
    case Derivation::down_zigzag: return "down-zigzag";
  }
  return "?";
}

class UnknownKnot : public std::out_of_range {
 public:
  explicit UnknownKnot(const KnotId& id) : std::out_of_range("unknown knot '" + id.name + "'") {}
};

struct LegendrianKnot {
  KnotId id;
  std::int64_t tb = 0;
  std::int64_t rot = 0;
  // Set for push-off children. `history` starts with push_off in that case and
  // lists every zigzag applied to this knot afterwards, in order.
  std::optional<KnotId> parent;
  std::vector<Derivation> history;

  friend bool operator==(const LegendrianKnot&, const LegendrianKnot&) = default;
};

class LegendrianLink {
 public:
  std::size_t size() const noexcept { return knots_.size(); }
  bool empty() const noexcept { return knots_.empty(); }
  const std::vector<LegendrianKnot>& knots() const noexcept { return knots_; }
  const LegendrianKnot& knot(std::size_t i) const { return knots_.at(i); }
  const LegendrianKnot& knot(const KnotId& id) const { return knots_[index_of(id)]; }

  bool contains(const KnotId& id) const { return find(id).has_value(); }

  std::size_t index_of(const KnotId& id) const {
    if (auto i = find(id)) return *i;
    throw UnknownKnot(id);
  }

  /// Appends a root knot. `linking` gives lk with every existing component, in order.
  void add_knot(KnotId id, std::int64_t tb, std::int64_t rot, std::span<const std::int64_t> linking) {
    if (contains(id)) throw std::invalid_argument("duplicate knot id '" + id.name + "'");
    if (linking.size() != knots_.size())
      throw std::invalid_argument("add_knot: need one linking number per existing component");
    for (std::size_t i = 0; i < knots_.size(); ++i) lk_[i].push_back(linking[i]);
    lk_.emplace_back(linking.begin(), linking.end());
    lk_.back().push_back(0);
    knots_.push_back({std::move(id), tb, rot, std::nullopt, {}});
  }

  void add_knot(KnotId id, std::int64_t tb, std::int64_t rot, std::initializer_list<std::int64_t> linking) {
    add_knot(std::move(id), tb, rot, std::span<const std::int64_t>(linking.begin(), linking.size()));
  }

  std::int64_t linking(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) throw std::out_of_range("linking: index out of range");
    if (i == j) throw std::invalid_argument("linking: a knot has no linking number with itself");
    return lk_[i][j];
  }
  std::int64_t linking(const KnotId& a, const KnotId& b) const { return linking(index_of(a), index_of(b)); }

  void set_linking(const KnotId& a, const KnotId& b, std::int64_t value) {
    const std::size_t i = index_of(a);
    const std::size_t j = index_of(b);
    if (i == j) throw std::invalid_argument("set_linking: a knot has no linking number with itself");
    lk_[i][j] = lk_[j][i] = value;
  }

  /// Records provenance for a knot read back from a file. The parent must
  /// precede the child so the derivation chain stays acyclic.
  void set_provenance(const KnotId& child, std::optional<KnotId> parent, std::vector<Derivation> history) {
    const std::size_t c = index_of(child);
    if (parent) {
      if (index_of(*parent) >= c) throw std::invalid_argument("provenance: parent must precede child");
      if (history.empty() || history.front() != Derivation::push_off)
        throw std::invalid_argument("provenance: a derived knot's history starts with push-off");
    }
    knots_[c].parent = std::move(parent);
    knots_[c].history = std::move(history);
  }

  /// Drops components; surviving children of removed knots become roots.
  LegendrianLink without(std::span<const KnotId> removed) const {
    std::vector<bool> keep(size(), true);
    for (const auto& id : removed) keep[index_of(id)] = false;
    LegendrianLink out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (!keep[i]) continue;
      LegendrianKnot k = knots_[i];
      if (k.parent && !keep[index_of(*k.parent)]) {
        k.parent.reset();
        k.history.clear();
      }
      out.knots_.push_back(std::move(k));
    }
    for (std::size_t i = 0; i < size(); ++i) {
      if (!keep[i]) continue;
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < size(); ++j)
        if (keep[j]) row.push_back(lk_[i][j]);
      out.lk_.push_back(std::move(row));
    }
    return out;
  }

  friend bool operator==(const LegendrianLink&, const LegendrianLink&) = default;

 private:
  friend std::pair<LegendrianLink, KnotId> push_off(const LegendrianLink&, const KnotId&, std::optional<KnotId>);
  friend LegendrianLink stabilize(const LegendrianLink&, const KnotId&, Zigzag);

  std::optional<std::size_t> find(const KnotId& id) const {
    for (std::size_t i = 0; i < knots_.size(); ++i)
      if (knots_[i].id == id) return i;
    return std::nullopt;
  }

  std::vector<LegendrianKnot> knots_;
  std::vector<std::vector<std::int64_t>> lk_;  // symmetric, diagonal unused
};

/// Contact-framing push-off of `k`. The copy carries the same (tb, rot),
/// links k exactly tb(k) times and inherits every other linking number.
/// Without a name the child is called `<k>'`, with more primes on collision.
inline std::pair<LegendrianLink, KnotId> push_off(const LegendrianLink& link, const KnotId& k,
                                                  std::optional<KnotId> name = std::nullopt) {
  const std::size_t p = link.index_of(k);
  KnotId child = name ? *name : KnotId{k.name + "'"};
  while (!name && link.contains(child)) child.name += "'";
  if (link.contains(child)) throw std::invalid_argument("duplicate knot id '" + child.name + "'");

  LegendrianLink out = link;
  const LegendrianKnot& parent = link.knots_[p];
  std::vector<std::int64_t> row = link.lk_[p];
  row[p] = parent.tb;
  for (std::size_t i = 0; i < out.size(); ++i) out.lk_[i].push_back(row[i]);
  row.push_back(0);
  out.lk_.push_back(std::move(row));
  out.knots_.push_back({child, parent.tb, parent.rot, parent.id, {Derivation::push_off}});
  return {std::move(out), child};
}

/// One zigzag on `k`: tb drops by one; an up-zigzag lowers rot by one and a
/// down-zigzag raises it. Linking numbers do not change.
inline LegendrianLink stabilize(const LegendrianLink& link, const KnotId& k, Zigzag direction) {
  LegendrianLink out = link;
  LegendrianKnot& knot = out.knots_[link.index_of(k)];
  knot.tb -= 1;
  knot.rot += direction == Zigzag::up ? -1 : 1;
  knot.history.push_back(direction == Zigzag::up ? Derivation::up_zigzag : Derivation::down_zigzag);
  return out;
}

/// Self-linking number of the positive transverse push-off, sl = tb - rot.
inline std::int64_t transverse_pushoff_self_linking(const LegendrianKnot& k) { return k.tb - k.rot; }

}  // namespace lutz
