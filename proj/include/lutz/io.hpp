// Line-oriented text formats for matrices, links, surgery diagrams and open
// books. Blank lines and anything after '#' are ignored by every reader.
//
// matrix      first line `rows cols`, then one line of integers per row
// link        `id tb rot` per knot, `lk id1 id2 value` for every pair,
//             optional `derive id parent|- step...` provenance lines
// diagram     `ambient s3|s1xs2 [id]|abstract`, the link lines, and
//             `coeff id +1|-1` for every knot
// open book   `genus g boundaries b`, `curve id locus args class=v1,v2,...`,
//             `twist id right|left`; relative books add `role k binding|manifold`

#pragma once

#include "lutz/exact_linalg.hpp"
#include "lutz/legendrian.hpp"
#include "lutz/openbook.hpp"
#include "lutz/surgery.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lutz {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace io_detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{n, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

inline std::int64_t to_int64(const std::string& tok, std::size_t line) {
  std::int64_t v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || first == tok.data() + tok.size() ||
      (first != tok.data() && *first == '-'))
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

inline Integer to_integer(const std::string& tok, std::size_t line) {
  std::size_t start = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
  if (start == tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  for (std::size_t i = start; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') throw ParseError(line, "expected an integer, got '" + tok + "'");
  Integer v(tok.substr(start));
  return tok[0] == '-' ? Integer(-v) : v;
}

inline std::size_t to_index(const std::string& tok, std::size_t line) {
  const std::int64_t v = to_int64(tok, line);
  if (v < 0) throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

inline void expect_arity(const Line& l, std::size_t n, const char* form) {
  if (l.tokens.size() != n) throw ParseError(l.number, std::string("expected `") + form + "`");
}

inline bool is_keyword(const std::string& tok) {
  static const std::set<std::string> words{"lk", "derive", "coeff", "ambient"};
  return words.count(tok) > 0;
}

inline Derivation to_derivation(const std::string& tok, std::size_t line) {
  if (tok == "push-off") return Derivation::push_off;
  if (tok == "up-zigzag") return Derivation::up_zigzag;
  if (tok == "down-zigzag") return Derivation::down_zigzag;
  throw ParseError(line, "unknown derivation step '" + tok + "'");
}

// Shared by the link and diagram readers; `extra` sees lines it does not own.
template <typename Extra>
LegendrianLink parse_link_lines(const std::vector<Line>& lines, Extra&& extra) {
  LegendrianLink link;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> lk;
  std::vector<const Line*> derives;
  for (const Line& l : lines) {
    const std::string& head = l.tokens[0];
    if (head == "lk") {
      expect_arity(l, 4, "lk id1 id2 value");
      std::size_t i = 0, j = 0;
      try {
        i = link.index_of({l.tokens[1]});
        j = link.index_of({l.tokens[2]});
      } catch (const UnknownKnot& e) {
        throw ParseError(l.number, e.what());
      }
      if (i == j) throw ParseError(l.number, "a knot has no linking number with itself");
      const std::pair<std::size_t, std::size_t> key{std::min(i, j), std::max(i, j)};
      const std::int64_t v = to_int64(l.tokens[3], l.number);
      if (auto [it, fresh] = lk.emplace(key, v); !fresh && it->second != v)
        throw ParseError(l.number, "conflicting linking numbers for " + l.tokens[1] + ", " + l.tokens[2]);
    } else if (head == "derive") {
      derives.push_back(&l);
    } else if (is_keyword(head)) {
      extra(l);
    } else {
      expect_arity(l, 3, "id tb rot");
      if (link.contains({head})) throw ParseError(l.number, "duplicate knot id '" + head + "'");
      std::vector<std::int64_t> zeros(link.size(), 0);
      link.add_knot({head}, to_int64(l.tokens[1], l.number), to_int64(l.tokens[2], l.number), zeros);
    }
  }
  for (std::size_t i = 0; i < link.size(); ++i)
    for (std::size_t j = i + 1; j < link.size(); ++j) {
      auto it = lk.find({i, j});
      if (it == lk.end())
        throw ParseError(0, "missing linking number for " + link.knot(i).id.name + ", " + link.knot(j).id.name);
      link.set_linking(link.knot(i).id, link.knot(j).id, it->second);
    }
  for (const Line* l : derives) {
    if (l->tokens.size() < 3) throw ParseError(l->number, "expected `derive id parent|- step...`");
    std::optional<KnotId> parent;
    if (l->tokens[2] != "-") parent = KnotId{l->tokens[2]};
    std::vector<Derivation> steps;
    for (std::size_t k = 3; k < l->tokens.size(); ++k) steps.push_back(to_derivation(l->tokens[k], l->number));
    try {
      link.set_provenance({l->tokens[1]}, parent, std::move(steps));
    } catch (const std::exception& e) {
      throw ParseError(l->number, e.what());
    }
  }
  return link;
}

inline void write_link_lines(std::ostream& out, const LegendrianLink& link) {
  for (const auto& k : link.knots()) out << k.id.name << ' ' << k.tb << ' ' << k.rot << '\n';
  for (std::size_t i = 0; i < link.size(); ++i)
    for (std::size_t j = i + 1; j < link.size(); ++j)
      out << "lk " << link.knot(i).id.name << ' ' << link.knot(j).id.name << ' ' << link.linking(i, j) << '\n';
  for (const auto& k : link.knots()) {
    if (!k.parent && k.history.empty()) continue;
    out << "derive " << k.id.name << ' ' << (k.parent ? k.parent->name : "-");
    for (Derivation d : k.history) out << ' ' << to_string(d);
    out << '\n';
  }
}

}  // namespace io_detail

inline IntMatrix read_matrix(std::istream& in) {
  const auto lines = io_detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty matrix file");
  io_detail::expect_arity(lines[0], 2, "rows cols");
  const std::size_t rows = io_detail::to_index(lines[0].tokens[0], lines[0].number);
  const std::size_t cols = io_detail::to_index(lines[0].tokens[1], lines[0].number);
  // Rows of a matrix with no columns are blank lines, which tokenize drops.
  if (lines.size() != (cols == 0 ? 1 : rows + 1))
    throw ParseError(0, "expected " + std::to_string(rows) + " matrix rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows && cols > 0; ++i) {
    const auto& l = lines[i + 1];
    if (l.tokens.size() != cols) throw ParseError(l.number, "expected " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = io_detail::to_integer(l.tokens[j], l.number);
  }
  return m;
}

inline void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

inline LegendrianLink read_link(std::istream& in) {
  return io_detail::parse_link_lines(io_detail::tokenize(in), [](const io_detail::Line& l) {
    throw ParseError(l.number, "unexpected '" + l.tokens[0] + "' line in a link file");
  });
}

inline void write_link(std::ostream& out, const LegendrianLink& link) { io_detail::write_link_lines(out, link); }

inline ContactSurgeryDiagram read_diagram(std::istream& in) {
  const auto lines = io_detail::tokenize(in);
  std::optional<Ambient> ambient;
  std::optional<KnotId> component;
  std::vector<const io_detail::Line*> coeff_lines;
  LegendrianLink link = io_detail::parse_link_lines(lines, [&](const io_detail::Line& l) {
    if (l.tokens[0] == "coeff") {
      io_detail::expect_arity(l, 3, "coeff id +1|-1");
      coeff_lines.push_back(&l);
      return;
    }
    if (ambient) throw ParseError(l.number, "duplicate ambient header");
    const std::string& tag = l.tokens.size() >= 2 ? l.tokens[1] : std::string();
    if (tag == "s3" && l.tokens.size() == 2) {
      ambient = Ambient::s3;
    } else if (tag == "abstract" && l.tokens.size() == 2) {
      ambient = Ambient::abstract;
    } else if (tag == "s1xs2" && l.tokens.size() <= 3) {
      ambient = Ambient::s1xs2_via_l0;
      if (l.tokens.size() == 3) component = KnotId{l.tokens[2]};
    } else {
      throw ParseError(l.number, "expected `ambient s3|s1xs2 [id]|abstract`");
    }
  });
  if (!ambient) throw ParseError(0, "missing ambient header");

  std::vector<std::optional<int>> coeffs(link.size());
  for (const io_detail::Line* l : coeff_lines) {
    if (!link.contains({l->tokens[1]})) throw ParseError(l->number, "unknown knot '" + l->tokens[1] + "'");
    const std::int64_t c = io_detail::to_int64(l->tokens[2], l->number);
    if (c != 1 && c != -1) throw ParseError(l->number, "surgery coefficient must be +1 or -1");
    auto& slot = coeffs[link.index_of({l->tokens[1]})];
    if (slot) throw ParseError(l->number, "duplicate coefficient for '" + l->tokens[1] + "'");
    slot = static_cast<int>(c);
  }
  std::vector<int> values;
  for (std::size_t i = 0; i < link.size(); ++i) {
    if (!coeffs[i]) throw ParseError(0, "missing coefficient for '" + link.knot(i).id.name + "'");
    values.push_back(*coeffs[i]);
  }
  if (*ambient == Ambient::s1xs2_via_l0 && !component) {
    if (link.empty()) throw ParseError(0, "s1xs2 ambient needs a component");
    component = link.knot(0).id;
  }
  try {
    return ContactSurgeryDiagram(std::move(link), std::move(values), *ambient, component);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

inline void write_diagram(std::ostream& out, const ContactSurgeryDiagram& d) {
  out << "ambient " << to_string(d.ambient());
  if (d.ambient_component()) out << ' ' << d.ambient_component()->name;
  out << '\n';
  io_detail::write_link_lines(out, d.link());
  for (std::size_t i = 0; i < d.size(); ++i)
    out << "coeff " << d.link().knot(i).id.name << ' ' << (d.coefficient(i) > 0 ? "+1" : "-1") << '\n';
}

namespace io_detail {

inline HomologyClass parse_class(const std::string& tok, std::size_t line) {
  if (tok.rfind("class=", 0) != 0) throw ParseError(line, "expected class=<vector>");
  HomologyClass v;
  std::string body = tok.substr(6);
  std::istringstream ss(body);
  for (std::string part; std::getline(ss, part, ',');) v.push_back(to_int64(part, line));
  if (!body.empty() && body.back() == ',') throw ParseError(line, "trailing comma in class vector");
  return v;
}

inline std::vector<BindingId> parse_punctures(const std::string& tok, std::size_t line) {
  std::vector<BindingId> out;
  if (tok == "-") return out;
  std::istringstream ss(tok);
  for (std::string part; std::getline(ss, part, ',');) out.push_back({to_index(part, line)});
  return out;
}

inline OpenBook parse_openbook(const std::vector<Line>& lines, std::vector<std::optional<BoundaryRole>>* roles) {
  if (lines.empty()) throw ParseError(0, "empty open book file");
  const Line& h = lines[0];
  if (h.tokens.size() != 4 || h.tokens[0] != "genus" || h.tokens[2] != "boundaries")
    throw ParseError(h.number, "expected `genus g boundaries b`");
  const std::int64_t g = to_int64(h.tokens[1], h.number);
  const std::size_t b = to_index(h.tokens[3], h.number);
  std::optional<OpenBook> ob;
  try {
    ob.emplace(static_cast<int>(g), b);
  } catch (const std::invalid_argument& e) {
    throw ParseError(h.number, e.what());
  }
  if (roles) roles->assign(b, std::nullopt);

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& t = l.tokens;
    try {
      if (t[0] == "curve") {
        if (t.size() < 4) throw ParseError(l.number, "expected `curve id locus args class=...`");
        CurveLocus locus;
        std::size_t class_at = 0;
        if (t[2] == "boundary-parallel") {
          expect_arity(l, 5, "curve id boundary-parallel k class=...");
          locus = BoundaryParallel{{to_index(t[3], l.number)}};
          class_at = 4;
        } else if (t[2] == "encircles") {
          expect_arity(l, 6, "curve id encircles k p1,p2,... class=...");
          locus = Encircles{{to_index(t[3], l.number)}, parse_punctures(t[4], l.number)};
          class_at = 5;
        } else if (t[2] == "parallel-copy") {
          expect_arity(l, 5, "curve id parallel-copy source class=...");
          locus = ParallelCopy{{t[3]}};
          class_at = 4;
        } else {
          throw ParseError(l.number, "unknown curve locus '" + t[2] + "'");
        }
        HomologyClass cls = parse_class(t[class_at], l.number);
        if (cls.size() + 1 != ob->class_size())
          throw ParseError(l.number, "class vector needs " + std::to_string(ob->class_size() - 1) + " entries");
        cls.push_back(0);
        ob->add_curve({{t[1]}, std::move(locus), std::move(cls)});
      } else if (t[0] == "twist") {
        expect_arity(l, 3, "twist id right|left");
        if (t[2] != "right" && t[2] != "left") throw ParseError(l.number, "twist must be right or left");
        ob->add_twist({t[1]}, t[2] == "right" ? Handedness::right : Handedness::left);
      } else if (t[0] == "role" && roles) {
        expect_arity(l, 3, "role k binding|manifold");
        const std::size_t k = to_index(t[1], l.number);
        if (k >= b) throw ParseError(l.number, "role for unknown boundary circle");
        if (t[2] != "binding" && t[2] != "manifold") throw ParseError(l.number, "role must be binding or manifold");
        if ((*roles)[k]) throw ParseError(l.number, "duplicate role line");
        (*roles)[k] = t[2] == "binding" ? BoundaryRole::binding : BoundaryRole::manifold_boundary;
      } else {
        throw ParseError(l.number, "unexpected '" + t[0] + "' line in an open book file");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(l.number, e.what());
    }
  }
  return std::move(*ob);
}

inline void write_openbook_lines(std::ostream& out, const OpenBook& ob) {
  out << "genus " << ob.genus() << " boundaries " << ob.boundary_count() << '\n';
  for (const auto& c : ob.curves()) {
    out << "curve " << c.id.name << ' ';
    if (const auto* bp = std::get_if<BoundaryParallel>(&c.locus)) {
      out << "boundary-parallel " << bp->binding.index;
    } else if (const auto* e = std::get_if<Encircles>(&c.locus)) {
      out << "encircles " << e->binding.index << ' ';
      if (e->punctures.empty()) out << '-';
      for (std::size_t i = 0; i < e->punctures.size(); ++i) out << (i ? "," : "") << e->punctures[i].index;
    } else if (const auto* pc = std::get_if<ParallelCopy>(&c.locus)) {
      out << "parallel-copy " << pc->source.name;
    }
    const HomologyClass r = ob.reduced(c.h1_class);
    out << " class=";
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << '\n';
  }
  for (const auto& tw : ob.monodromy()) out << "twist " << tw.curve.name << ' ' << to_string(tw.hand) << '\n';
}

}  // namespace io_detail

inline OpenBook read_openbook(std::istream& in) {
  return io_detail::parse_openbook(io_detail::tokenize(in), nullptr);
}

inline void write_openbook(std::ostream& out, const OpenBook& ob) { io_detail::write_openbook_lines(out, ob); }

inline RelativeOpenBook read_relative_openbook(std::istream& in) {
  std::vector<std::optional<BoundaryRole>> roles;
  RelativeOpenBook rob{io_detail::parse_openbook(io_detail::tokenize(in), &roles), {}};
  for (std::size_t k = 0; k < roles.size(); ++k) {
    if (!roles[k]) throw ParseError(0, "missing role for boundary circle " + std::to_string(k));
    rob.roles.push_back(*roles[k]);
  }
  try {
    rob.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return rob;
}

inline void write_relative_openbook(std::ostream& out, const RelativeOpenBook& rob) {
  io_detail::write_openbook_lines(out, rob.page);
  for (std::size_t k = 0; k < rob.roles.size(); ++k) out << "role " << k << ' ' << to_string(rob.roles[k]) << '\n';
}

}  // namespace lutz
