// lutzcalc: command-line front end for the Lutz-twist surgery and open book tools.
//
// Exit status: 0 on success, 1 when a verification check fails, 2 on usage
// or input errors.

#include "lutz/lutz.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kUsageError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

template <typename Writer>
void write_file(const std::string& path, Writer&& write) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write(out);
}

std::string signed_coeff(int c) { return c > 0 ? "+1" : "-1"; }

std::string element_string(const std::vector<lutz::Integer>& e) {
  if (e.empty()) return "()";
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
  out << ')';
  return out.str();
}

void print_matrix_rows(std::ostream& out, const lutz::IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << ' ';
    for (std::size_t j = 0; j < m.cols(); ++j) out << ' ' << m(i, j);
    out << '\n';
  }
}

int cmd_lutz_link(std::int64_t tb, std::int64_t rot, bool simple, const std::string& output) {
  const lutz::ContactSurgeryDiagram d = simple ? lutz::simple_lutz_link(tb, rot) : lutz::full_lutz_link(tb, rot);
  std::cout << "components " << d.size() << '\n';
  std::cout << "id tb rot tf coeff\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& k = d.link().knot(i);
    std::cout << k.id.name << ' ' << k.tb << ' ' << k.rot << ' ' << lutz::topological_framing(d, i) << ' '
              << signed_coeff(d.coefficient(i)) << '\n';
  }
  std::cout << "linking matrix\n";
  print_matrix_rows(std::cout, lutz::linking_matrix(d).matrix());
  if (!output.empty()) write_file(output, [&](std::ostream& out) { lutz::write_diagram(out, d); });
  return 0;
}

int cmd_invariants(const std::string& path) {
  auto in = open_input(path);
  const lutz::ContactSurgeryDiagram d = lutz::read_diagram(in);
  const lutz::HomotopyReport r = lutz::homotopy_report(d);

  std::cout << "ambient " << lutz::to_string(d.ambient()) << '\n';
  std::cout << "components " << d.size() << '\n';
  std::cout << "H1 " << r.h1.to_string() << '\n';
  std::cout << "meridians";
  for (std::size_t i = 0; i < d.size(); ++i)
    std::cout << ' ' << d.link().knot(i).id.name << '=' << element_string(r.h1.generator_images[i]);
  std::cout << '\n';
  std::cout << "euler " << element_string(r.euler.element) << (r.euler.vanishes ? " vanishes" : " nonzero") << '\n';
  std::cout << "d2 " << lutz::to_string(r.d2) << '\n';

  const lutz::D3Inputs& in3 = r.d3.inputs;
  std::cout << "signature " << in3.signature << '\n';
  std::cout << "c^2 " << (in3.c_squared ? in3.c_squared->str() : "undefined") << '\n';
  std::cout << "chi " << in3.euler_characteristic << " (1 zero-handle + " << d.size() << " two-handles)\n";
  std::cout << "chi-alt " << in3.euler_characteristic + 1 << " (one more 2-handle for an ambient unknot)\n";
  std::cout << "q " << in3.plus_one_surgeries << '\n';
  if (r.d3.value)
    std::cout << "d3 " << r.d3.value->str() << '\n';
  else
    std::cout << "d3 undefined: " << r.d3.reason << '\n';
  return 0;
}

void print_trace(const lutz::LutzTrace& t) {
  std::cout << "genus " << t.genus_before << " -> " << t.genus_after << '\n';
  std::cout << "boundaries " << t.boundaries_before << " -> " << t.boundaries_after << '\n';
  std::cout << "initial-stabilization " << (t.initial_stabilization ? "yes" : "no") << '\n';
  std::cout << "word-delta right=" << t.right_twists_added << " left=" << t.left_twists_added << '\n';
  std::cout << "link " << t.l1.name << ' ' << t.l2.name << ' ' << t.l3.name << ' ' << t.l4.name << '\n';
  std::cout << "stabilization-curves";
  for (const auto& c : t.stabilization_curves) std::cout << ' ' << c.name;
  std::cout << '\n';
}

int cmd_openbook_lutz(const std::string& path, std::optional<std::size_t> binding, const std::string& output,
                      bool emit_t2xi) {
  if (!path.empty()) {
    if (!binding) throw InputError("--binding is required with an open book file");
    auto in = open_input(path);
    const lutz::OpenBook ob = lutz::read_openbook(in);
    if (!ob.has_binding({*binding})) throw InputError("unknown binding " + std::to_string(*binding));
    const auto [after, trace] = lutz::full_lutz_on_binding(ob, {*binding});
    print_trace(trace);
    if (output.empty()) {
      std::cout << "open-book\n";
      lutz::write_openbook(std::cout, after);
    } else {
      write_file(output, [&](std::ostream& out) { lutz::write_openbook(out, after); });
    }
  } else if (!emit_t2xi) {
    throw InputError("openbook-lutz needs an open book file or --emit-t2xi");
  }
  if (emit_t2xi) {
    const lutz::RelativeOpenBook piece = lutz::t2xI_relative_piece();
    std::cout << "relative-piece genus " << piece.page.genus() << " boundaries " << piece.page.boundary_count()
              << " manifold-boundary " << piece.count(lutz::BoundaryRole::manifold_boundary) << '\n';
    lutz::write_relative_openbook(std::cout, piece);
  }
  return 0;
}

int cmd_snf(const std::string& path) {
  auto in = open_input(path);
  const lutz::IntMatrix a = lutz::read_matrix(in);
  const lutz::SmithForm f = lutz::smith_normal_form(a);
  std::cout << "diagonal";
  for (const auto& d : f.diagonal()) std::cout << ' ' << d;
  std::cout << '\n';
  std::cout << "cokernel " << lutz::cokernel(a).to_string() << '\n';
  std::cout << "U\n";
  print_matrix_rows(std::cout, f.U);
  std::cout << "D\n";
  print_matrix_rows(std::cout, f.D);
  std::cout << "V\n";
  print_matrix_rows(std::cout, f.V);
  return 0;
}

int cmd_verify_paper() {
  const lutz::VerificationReport rep = lutz::verify_paper();
  rep.print(std::cout);
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contact surgery and open book calculator for full Lutz twists"};
  app.require_subcommand(1);

  std::int64_t tb = 0;
  std::int64_t rot = 0;
  bool simple = false;
  std::string link_output;
  auto* lutz_link = app.add_subcommand("lutz-link", "Build the Lutz-twist surgery link for L1 = (tb, rot)");
  lutz_link->add_option("--tb", tb, "Thurston-Bennequin invariant of L1")->required();
  lutz_link->add_option("--rot", rot, "Rotation number of L1")->required();
  lutz_link->add_flag("--simple", simple, "Two-component link of a simple Lutz twist");
  lutz_link->add_option("-o,--output", link_output, "Write the diagram file here");

  std::string diagram_path;
  auto* invariants = app.add_subcommand("invariants", "H1, Euler class, d2 and d3 of a surgery diagram");
  invariants->add_option("diagram", diagram_path, "Diagram file")->required();

  std::string ob_path;
  std::optional<std::size_t> binding;
  std::string ob_output;
  bool emit_t2xi = false;
  auto* openbook = app.add_subcommand("openbook-lutz", "Full Lutz twist along a binding component of an open book");
  openbook->add_option("openbook", ob_path, "Open book file");
  openbook->add_option("--binding", binding, "Binding component index");
  openbook->add_option("-o,--output", ob_output, "Write the transformed open book here");
  openbook->add_flag("--emit-t2xi", emit_t2xi, "Print the relative open book of the twisted T^2 x I layer");

  std::string matrix_path;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
  snf->add_option("matrix", matrix_path, "Matrix file")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run every exact check of the construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*lutz_link) return cmd_lutz_link(tb, rot, simple, link_output);
    if (*invariants) return cmd_invariants(diagram_path);
    if (*openbook) return cmd_openbook_lutz(ob_path, binding, ob_output, emit_t2xi);
    if (*snf) return cmd_snf(matrix_path);
    if (*verify) return cmd_verify_paper();
  } catch (const lutz::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
