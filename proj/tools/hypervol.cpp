// Command-line front end: volume, sweep, verify and oracle subcommands.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hypervol/hypervol.hpp"

namespace {

using nlohmann::json;
using namespace hypervol;

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalidInput = 2, kVerificationFailed = 3, kRefused = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AngleInput {
  std::vector<double> values;
  bool degrees = false;
  double ideal_rel = 1e-6;

  void attach(CLI::App& cmd) {
    cmd.add_option("angles", values, "Dihedral angles A B C D E F (radians unless --degrees)")
        ->required()
        ->expected(6);
    cmd.add_flag("--degrees", degrees, "Read the angles in degrees");
    cmd.add_option("--ideal-tol", ideal_rel, "Relative threshold on |c_ii| for ideal vertices")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  }

  DihedralAngles get() const {
    std::array<double, 6> a{};
    for (std::size_t k = 0; k < 6; ++k) a[k] = degrees ? degrees_to_radians(values[k]) : values[k];
    const DihedralAngles angles = DihedralAngles::from_array(a);
    if (!angles.in_domain()) throw UsageError("dihedral angles must lie in [0, pi)");
    return angles;
  }
};

std::string format_complex(Complex z) {
  const std::string im = format_real(std::abs(z.imag()));
  return format_real(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

// Everything reported about one tetrahedron.
struct TetraReport {
  DihedralAngles angles;
  TetrahedronShape shape;
  VolumeResult volume;
  std::array<EdgeLength, 6> lengths;
};

// Typed angles carry a few decimals only (1.0471976 for pi/3), so the CLI
// reads |c_ii| <= ideal_rel * max(1, |det G|) as ideal.
TetraReport analyse(const DihedralAngles& angles, double ideal_rel) {
  const double tol = ideal_rel * std::max(1.0, std::abs(determinant(require_valid(angles))));
  TetraReport r{angles, construct_shape(angles, kDefaultEps, tol), tetra_volume(angles), {}};
  r.lengths = edge_lengths(r.shape);
  return r;
}

json null_report() {
  return {{"volume", nullptr}, {"z1", nullptr},      {"z2", nullptr},
          {"det_g", nullptr},  {"classes", nullptr}, {"lengths", nullptr},
          {"warnings", json::array()}};
}

json report_json(const TetraReport& r) {
  json classes = json::array();
  for (const auto& c : r.shape.classes) classes.push_back(std::string(kind_name(c.kind)));
  json lengths = json::object();
  for (const auto& l : r.lengths) lengths[std::string(label_name(l.label))] = l.value;  // inf becomes null
  return {{"volume", r.volume.volume},
          {"z1", complex_json(r.volume.saddles.z1)},
          {"z2", complex_json(r.volume.saddles.z2)},
          {"det_g", r.shape.det_g},
          {"classes", classes},
          {"lengths", lengths},
          {"warnings", r.volume.branch_warnings}};
}

void print_report_text(std::ostream& out, const TetraReport& r) {
  out << "volume " << format_real(r.volume.volume) << '\n';
  out << "z1 " << format_complex(r.volume.saddles.z1) << '\n';
  out << "z2 " << format_complex(r.volume.saddles.z2) << '\n';
  out << "det_g " << format_real(r.shape.det_g) << '\n';
  for (int i = 0; i < 4; ++i) {
    out << "vertex " << i + 1 << ' ' << kind_name(r.shape.classes[i].kind) << " c_" << i + 1 << i + 1 << '='
        << format_real(r.shape.classes[i].cofactor) << '\n';
  }
  for (const auto& l : r.lengths) {
    out << "length " << label_name(l.label) << " (v" << l.edge.first + 1 << " v" << l.edge.second + 1 << ") "
        << format_real(l.value) << '\n';
  }
  for (const auto& w : r.volume.branch_warnings) out << "warning " << w << '\n';
}

void print_report_csv(std::ostream& out, const TetraReport& r) {
  out << "volume,z1_re,z1_im,z2_re,z2_im,det_g,class_1,class_2,class_3,class_4";
  for (const auto& l : r.lengths) out << ",length_" << label_name(l.label);
  out << '\n';
  const auto& s = r.volume.saddles;
  out << format_real(r.volume.volume) << ',' << format_real(s.z1.real()) << ',' << format_real(s.z1.imag()) << ','
      << format_real(s.z2.real()) << ',' << format_real(s.z2.imag()) << ',' << format_real(r.shape.det_g);
  for (const auto& c : r.shape.classes) out << ',' << kind_name(c.kind);
  for (const auto& l : r.lengths) out << ',' << format_real(l.value);
  out << '\n';
}

int cmd_volume(const AngleInput& in, bool as_json, bool as_csv) {
  const TetraReport r = analyse(in.get(), in.ideal_rel);
  if (as_json) {
    std::cout << report_json(r).dump(2) << '\n';
  } else if (as_csv) {
    print_report_csv(std::cout, r);
  } else {
    print_report_text(std::cout, r);
  }
  return kOk;
}

int cmd_sweep(int steps, const std::string& out_path, bool as_json) {
  if (steps < 2) throw UsageError("--steps must be at least 2");
  const auto rows = regular_sweep(steps);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (as_json) {
    json j = null_report();
    json list = json::array();
    for (const auto& r : rows) {
      list.push_back({{"theta", r.theta},
                      {"volume", r.volume},
                      {"edge_length", r.edge_length},
                      {"vertex_class", std::string(kind_name(r.vertex_class.kind))}});
    }
    j["rows"] = list;
    out << j.dump(2) << '\n';
  } else {
    write_sweep_csv(out, rows);
  }
  out.flush();
  if (!out) throw UsageError("failed writing " + (out_path.empty() ? std::string("stdout") : out_path));
  return kOk;
}

int cmd_verify(int cases, std::uint64_t seed, bool as_json) {
  if (cases < 0) throw UsageError("--cases must be non-negative");
  VerifyOptions opts;
  opts.cases = cases;
  opts.seed = seed;
  const VerifyReport report = run_verification(opts);
  if (as_json) {
    json j = null_report();
    json props = json::array();
    for (const auto& p : report.properties) {
      props.push_back({{"name", p.name},
                       {"checked", p.checked},
                       {"failures", p.failures},
                       {"worst", p.worst},
                       {"failing_inputs", p.failing_inputs}});
    }
    j["verify"] = {{"cases", report.cases}, {"seed", report.seed}, {"passed", report.passed()}, {"properties", props}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "verify: " << report.cases << " cases, seed " << report.seed << '\n';
    for (const auto& p : report.properties) {
      std::cout << (p.passed() ? "PASS " : "FAIL ") << p.name << " checked=" << p.checked
                << " failures=" << p.failures << " worst=" << format_real(p.worst) << '\n';
      for (const auto& f : p.failing_inputs) std::cout << "  failing input " << f << '\n';
    }
    std::cout << (report.passed() ? "all properties passed" : "property failures detected") << '\n';
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_oracle(const AngleInput& in, std::int64_t samples, std::uint64_t seed, bool as_json) {
  if (samples <= 0) throw UsageError("--samples must be positive");
  const TetraReport r = analyse(in.get(), in.ideal_rel);
  if (r.shape.has_ideal_vertex()) {
    std::cerr << "oracle refused: the tetrahedron has an ideal vertex (unbounded Monte-Carlo density)\n";
    return kRefused;
  }
  const HalfSpaceSystem sys = halfspaces_from_shape(r.shape);
  const McEstimate est = mc_volume(sys, samples, seed, default_r_max(sys));
  const double diff = est.volume - r.volume.volume;
  const double z = est.std_error > 0.0 ? diff / est.std_error : (diff == 0.0 ? 0.0 : HUGE_VAL);
  const bool agree = std::abs(z) <= 4.0;
  if (as_json) {
    json j = report_json(r);
    j["oracle"] = {{"mc_volume", est.volume}, {"std_error", est.std_error}, {"z_score", z},
                   {"samples", est.samples},  {"accepted", est.accepted},   {"seed", est.seed},
                   {"truncation_planes", sys.truncations.size()},         {"agree", agree}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "formula_volume " << format_real(r.volume.volume) << '\n';
    std::cout << "mc_volume " << format_real(est.volume) << '\n';
    std::cout << "std_error " << format_real(est.std_error) << '\n';
    std::cout << "z_score " << format_real(z) << '\n';
    std::cout << "samples " << est.samples << " accepted " << est.accepted << " seed " << est.seed
              << " truncation_planes " << sys.truncations.size() << '\n';
    std::cout << (agree ? "agreement within 4 standard errors" : "DISAGREEMENT beyond 4 standard errors") << '\n';
  }
  return agree ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volumes of generalized hyperbolic tetrahedra from dihedral angles"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON object")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  auto* volume = app.add_subcommand("volume", "Volume, saddle points, vertex classes and edge lengths");
  AngleInput volume_angles;
  volume_angles.attach(*volume);
  bool as_csv = false;
  volume->add_flag("--json", as_json, "Emit one JSON object");
  volume->add_flag("--csv", as_csv, "Emit one CSV row with a header");

  auto* sweep = app.add_subcommand("sweep", "Regular family from theta = 0 towards arccos(1/3) as CSV");
  int steps = 200;
  std::string out_path;
  sweep->add_option("--steps", steps, "Number of grid points")->capture_default_str();
  sweep->add_option("--out", out_path, "Output file (default stdout)");
  sweep->add_flag("--json", as_json, "Emit JSON instead of CSV");

  auto* verify = app.add_subcommand("verify", "Seeded property checks");
  int cases = 100;
  std::uint64_t verify_seed = 1;
  verify->add_option("--cases", cases, "Random angle sets per property")->capture_default_str();
  verify->add_option("--seed", verify_seed, "Random seed")->capture_default_str();
  verify->add_flag("--json", as_json, "Emit one JSON object");

  auto* oracle = app.add_subcommand("oracle", "Monte-Carlo cross-check of the volume formula");
  AngleInput oracle_angles;
  oracle_angles.attach(*oracle);
  std::int64_t samples = 1000000;
  std::uint64_t oracle_seed = 1;
  oracle->add_option("--samples", samples, "Monte-Carlo samples")->capture_default_str();
  oracle->add_option("--seed", oracle_seed, "Random seed")->capture_default_str();
  oracle->add_flag("--json", as_json, "Emit one JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidInput;
  }

  try {
    if (volume->parsed()) return cmd_volume(volume_angles, as_json, as_csv);
    if (sweep->parsed()) return cmd_sweep(steps, out_path, as_json);
    if (verify->parsed()) return cmd_verify(cases, verify_seed, as_json);
    if (oracle->parsed()) return cmd_oracle(oracle_angles, samples, oracle_seed, as_json);
  } catch (const InvalidAngles& e) {
    std::cerr << "invalid angles: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const UsageError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
