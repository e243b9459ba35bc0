#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "equilat/branched_cover.hpp"
#include "equilat/census.hpp"
#include "equilat/degree_bound.hpp"
#include "equilat/error.hpp"
#include "equilat/parallelogram.hpp"
#include "equilat/surface.hpp"
#include "equilat/translation.hpp"

namespace equilat::cli {
namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
};

std::string fixed(double x, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

const char* mark(bool ok) { return ok ? "ok  " : "FAIL"; }

void degree_histogram(std::ostream& out, const VertexOrbits& orbits) {
  std::map<int, int> hist;
  for (const auto& v : orbits.vertices()) ++hist[v.degree];
  out << "degree histogram:\n";
  for (auto [deg, n] : hist) out << "  " << deg << ": " << n << '\n';
}

Outcome cmd_validate(const std::string& path, std::ostream& out) {
  const GluedSurface s = read_surface_file(path);
  const bool connected = is_connected(s);
  out << "faces " << s.face_count() << ", boundary darts " << s.boundary_dart_count() << '\n';
  out << "connected " << (connected ? "yes" : "no") << ", closed " << (s.is_closed() ? "yes" : "no") << '\n';
  if (!connected) return {false, "surface is disconnected"};
  const EulerReport e = euler_and_genus(s);
  for (const auto& w : e.warnings) out << "warning: " << w << '\n';
  if (!e.warnings.empty()) return {false, e.warnings.front()};
  return {true, "valid surface T=" + std::to_string(s.face_count()) + " g=" + std::to_string(e.genus)};
}

Outcome cmd_stats(const std::string& path, std::ostream& out) {
  const GluedSurface s = read_surface_file(path);
  const EulerReport e = euler_and_genus(s);
  out << "T=" << e.faces << " V=" << e.vertices << " E=" << e.edges << " chi=" << e.chi << " g=" << e.genus;
  if (e.boundary_components > 0) out << " b=" << e.boundary_components;
  out << '\n';
  const VertexOrbits orbits(s);
  degree_histogram(out, orbits);
  out << "V_>6=" << orbits.above_six().size() << " V_!=6=" << orbits.not_six().size() << '\n';
  return {true, "T=" + std::to_string(e.faces) + " g=" + std::to_string(e.genus)};
}

Outcome cmd_subdivide(const std::string& path, int k, const std::string& dest, std::ostream& out) {
  const GluedSurface s = read_surface_file(path);
  const GluedSurface r = subdivide(s, k);
  write_surface_file(dest, r);
  out << "wrote " << dest << ": " << r.face_count() << " faces\n";
  return {true, std::to_string(k) + "-subdivision T=" + std::to_string(r.face_count())};
}

Outcome cmd_double(const std::string& path, const std::string& dest, std::ostream& out) {
  const GluedSurface s = read_surface_file(path);
  const ConformalDouble d = conformal_double(s);
  write_surface_file(dest, d.surface);
  const EulerReport e = euler_and_genus(d.surface);
  out << "wrote " << dest << ": T=" << e.faces << " g=" << e.genus << '\n';
  return {d.surface.is_closed(), "double T=" + std::to_string(e.faces) + " g=" + std::to_string(e.genus)};
}

Outcome cmd_iso(const std::string& a, const std::string& b, std::ostream& out) {
  const bool iso = are_isomorphic(read_surface_file(a), read_surface_file(b));
  out << (iso ? "isomorphic" : "not isomorphic") << '\n';
  return {iso, iso ? "isomorphic" : "not isomorphic"};
}

Outcome cmd_random(int t, std::uint64_t seed, const std::string& dest, std::ostream& out) {
  const GluedSurface s = random_surface(t, seed);
  write_surface_file(dest, s);
  const EulerReport e = euler_and_genus(s);
  out << "wrote " << dest << ": T=" << e.faces << " g=" << e.genus << " seed=" << seed << '\n';
  return {true, "random T=" + std::to_string(t) + " g=" + std::to_string(e.genus)};
}

Outcome cmd_tran(const std::string& path, std::ostream& out) {
  const GluedSurface s = read_surface_file(path);
  const auto structures = detect_structures(s);
  out << "structures: " << structures.size() << '\n';
  if (structures.empty()) return {false, "no translation structure"};
  const TranslationStructure& st = structures.front();
  const auto types = face_types(s, st);
  const auto type_a = std::count(types.begin(), types.end(), FaceType::A);
  out << "face types: A=" << type_a << " B=" << types.size() - static_cast<std::size_t>(type_a) << '\n';

  const VertexOrbits orbits(s);
  const PeriodMap pm = period_map(s, st, 0);
  out << "loop periods (" << pm.cotree.size() << " co-tree edges):\n";
  out << "  dart  period       in 3Z[w]\n";
  for (std::size_t i = 0; i < pm.cotree.size(); ++i) {
    out << "  " << std::setw(4) << pm.cotree[i] << "  " << std::setw(11) << std::left << pm.holonomy[i].str()
        << std::right << "  " << (pm.holonomy[i].in_sublattice(3) ? "yes" : "no") << '\n';
  }
  const LocallyBoundedReport lb = is_locally_bounded_tran(s, st);
  out << "max degree " << lb.max_degree << ", cone points " << orbits.above_six().size() << '\n';
  out << "locally bounded: " << (lb.passed() ? "yes" : "no");
  if (!lb.detail.empty()) out << " (" << lb.detail << ')';
  out << '\n';
  out << "flat area: " << flat_area(s).quarters_root3 << " * sqrt(3)/4\n";
  return {true, "6 structures, " + std::string(lb.passed() ? "locally bounded" : "not locally bounded")};
}

Outcome cmd_degree_bound(const std::string& path, const std::string& dest, const std::string& cert_path,
                         std::ostream& out) {
  const GluedSurface s = read_surface_file(path);
  const BoundedDegreeResult r = bounded_degree_map(s);
  std::ostringstream cert;
  cert << "input T=" << s.face_count() << " g=" << r.genus << " V_!=6=" << r.v_ne6_before << '\n';
  cert << "S1 faces " << r.s1.face_count() << ", S2 faces " << r.s2.face_count() << ", B faces " << r.b.face_count()
       << '\n';
  cert << "star swaps: " << r.provenance.swaps.size() << '\n';
  for (const auto& sw : r.provenance.swaps) {
    cert << "  vertex " << sw.center << " degree " << sw.degree << " -> TH block of " << sw.block_faces
         << " faces at " << sw.block_begin << '\n';
  }
  cert << "sigma " << fixed(r.sigma) << '\n';
  cert << "mu " << fixed(r.mu) << " (V_!=6(B)=" << r.v_ne6_after << ")\n";

  const LbCertificate lb = check_tri_lb(r.b);
  const bool deg_ok = r.max_degree <= 7;
  const bool genus_ok = euler_and_genus(r.b).genus == r.genus;
  bool sep_ok = false;
  std::string sep_detail;
  if (lb.positive()) {
    const SeparationReport sep = separation_check(r.b, lb);
    sep_ok = sep.passed();
    sep_detail = "min distance " + std::to_string(sep.min_distance);
    if (!sep.detail.empty()) sep_detail += ", " + sep.detail;
  }
  const bool round_trip = recover_original(r.b, r.provenance) == s;
  cert << mark(deg_ok) << " max degree " << r.max_degree << " <= 7\n";
  cert << mark(genus_ok) << " genus preserved\n";
  cert << mark(lb.positive()) << " Tri_lb certificate" << (lb.detail.empty() ? "" : " (" + lb.detail + ")") << '\n';
  cert << mark(sep_ok) << " separation" << (sep_detail.empty() ? "" : " (" + sep_detail + ")") << '\n';
  cert << mark(round_trip) << " provenance recovers the input\n";
  out << cert.str();

  if (!dest.empty()) {
    write_surface_file(dest, r.b);
    out << "wrote " << dest << '\n';
  }
  if (!cert_path.empty()) {
    std::ofstream f(cert_path);
    if (!f) throw Error("cannot write '" + cert_path + "'");
    f << cert.str();
    out << "wrote " << cert_path << '\n';
  }
  const bool pass = deg_ok && genus_ok && lb.positive() && sep_ok && round_trip;
  return {pass, "B(S) T=" + std::to_string(r.b.face_count()) + " max degree " + std::to_string(r.max_degree) +
                    " mu=" + fixed(r.mu)};
}

Outcome cmd_decompose(const std::string& path, int structure, std::optional<std::uint64_t> seed, std::ostream& out) {
  const GluedSurface s = read_surface_file(path);
  const auto structures = detect_structures(s);
  if (structures.empty()) throw PreconditionError("surface admits no translation structure");
  if (structure < 0 || structure >= static_cast<int>(structures.size())) {
    throw PreconditionError("structure index must be in 0..5");
  }
  const Decomposition d = decompose(s, structures[static_cast<std::size_t>(structure)], seed);
  out << "genus " << d.genus << ", |V(B)|=" << d.b.vertices.size() << ", |E(B)|=" << d.b.edges.size()
      << ", |F(B)|=" << d.faces.size() << '\n';
  out << "  id   l   w  tri  corners (vertex:degree)\n";
  for (const auto& f : d.faces) {
    out << std::setw(4) << f.id << std::setw(4) << f.length << std::setw(4) << f.width << std::setw(5) << f.triangles
        << " ";
    for (std::size_t i = 0; i < f.corners.size(); ++i) out << ' ' << f.corners[i] << ':' << f.corner_degrees[i];
    if (!f.is_parallelogram()) out << "  [" << f.detail << ']';
    out << '\n';
  }
  bool all_faces = std::all_of(d.faces.begin(), d.faces.end(), [](const FaceGeometry& f) { return f.is_parallelogram(); });
  out << mark(d.b.properties_ok()) << " trajectory complex and V(B)" << (d.b.properties_ok() ? "" : " (" + d.b.detail + ")")
      << '\n';
  out << mark(all_faces) << " every face is a flat parallelogram\n";
  out << mark(d.sides_ok) << " sides >= 3\n";
  out << mark(d.cone_corners_ok) << " every face has a cone corner\n";
  out << mark(d.face_count_ok) << " |F(B)| <= 12(g-1) = " << 12 * (d.genus - 1) << '\n';
  out << mark(d.tiles) << " faces tile S\n";
  out << mark(d.area_ok) << " areas sum to " << d.total_area.quarters_root3 << " * sqrt(3)/4\n";
  return {d.passed(), std::to_string(d.faces.size()) + " parallelograms" + (d.passed() ? "" : ": " + d.detail)};
}

Outcome cmd_cover(const std::string& path, const std::string& dir, std::ostream& out) {
  const GluedSurface s = read_surface_file(path);
  const BranchedCover c = canonical_cover(s);
  const CoverReport report = verify_cover(s, c);
  std::filesystem::create_directories(dir);

  std::ostringstream manifest;
  const EulerReport e = euler_and_genus(s);
  manifest << "base T=" << e.faces << " g=" << e.genus << '\n';
  manifest << "branch points: " << c.branch_points.size() << '\n';
  for (const auto& b : c.branch_points) {
    manifest << "  vertex " << b.vertex << " degree " << b.degree << " ramification " << b.ramification << '\n';
  }
  manifest << "components: " << c.components.size() << '\n';
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const CoverComponent& comp = c.components[i];
    const std::string name = "component_" + std::to_string(i) + ".tsf";
    write_surface_file((std::filesystem::path(dir) / name).string(), comp.surface);
    const int n = static_cast<int>(c.branch_points.size());
    const int lhs = 2 * comp.genus - 2 + comp.critical_points;
    const int rhs = comp.degree * (2 * e.genus - 2) + comp.degree * n;
    manifest << "  " << name << " degree " << comp.degree << " genus " << comp.genus << " faces "
             << comp.surface.face_count() << " critical " << comp.critical_points << " RH " << lhs << " = " << rhs
             << (lhs == rhs ? " ok" : " FAIL") << '\n';
  }
  manifest << "checks:\n";
  for (const auto& line : report.checks) manifest << "  " << line << '\n';
  const std::string manifest_path = (std::filesystem::path(dir) / "manifest.txt").string();
  std::ofstream f(manifest_path);
  if (!f) throw Error("cannot write '" + manifest_path + "'");
  f << manifest.str();

  out << "wrote " << c.components.size() << " components and manifest.txt to " << dir << '\n';
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    out << "  component " << i << ": degree " << c.components[i].degree << " genus " << c.components[i].genus << '\n';
  }
  return {report.passed(), std::to_string(c.components.size()) + " components" +
                               (report.passed() ? "" : ": " + report.failure)};
}

int census_cap() {
  const char* env = std::getenv("EQUILAT_MAX_T");
  if (env == nullptr || *env == '\0') return CensusOptions{}.max_t;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(env, &used);
    if (used == std::string(env).size()) return cap;
  } catch (const std::exception&) {
  }
  throw PreconditionError(std::string("EQUILAT_MAX_T is not an integer: '") + env + "'");
}

Outcome cmd_census(int t_max, const std::string& filter_name, const std::string& dest, int jobs, bool force,
                   std::ostream& out) {
  CensusOptions opts;
  opts.max_t = force ? std::max(t_max, 2) : census_cap();
  opts.jobs = jobs;
  if (t_max > opts.max_t) {
    throw PreconditionError("--tmax " + std::to_string(t_max) + " exceeds the census cap " +
                            std::to_string(opts.max_t) + " (raise EQUILAT_MAX_T or pass --force)");
  }
  SurfaceFilter filter;
  if (filter_name == "tran") {
    filter = [](const GluedSurface& s) { return !detect_structures(s).empty(); };
  } else if (filter_name == "lb") {
    filter = [](const GluedSurface& s) { return check_tri_lb(s).positive(); };
  }
  const auto rows = count_table(t_max, filter, opts);
  const std::string csv = census_csv(rows);
  std::int64_t total = 0;
  for (const auto& r : rows) total += r.count;
  if (dest.empty()) {
    out << csv;
  } else {
    std::ofstream f(dest);
    if (!f) throw Error("cannot write '" + dest + "'");
    f << csv;
    out << "wrote " << dest << ": " << rows.size() << " rows\n";
  }
  for (const auto& r : rows) {
    if (r.degenerate_count > 0) {
      out << "T=" << r.t << " g=" << r.genus << ": " << r.degenerate_count << " with loops or multi-edges\n";
    }
  }
  return {true, std::to_string(total) + " classes with T <= " + std::to_string(t_max)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilateral triangulated surfaces: gluings, translation structures, covers, census"};
  app.name("equilat");
  app.require_subcommand(1);

  std::string in, in2, dest, cert, filter;
  int k = 3, t = 0, structure = 0, jobs = 1;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> shuffle;
  bool force = false;

  auto* validate = app.add_subcommand("validate", "Parse a TSF file and check it describes a surface");
  validate->add_option("file", in, "TSF input")->required();
  auto* stats = app.add_subcommand("stats", "V, E, F, chi, genus and degree histogram");
  stats->add_option("file", in, "TSF input")->required();
  auto* sub = app.add_subcommand("subdivide", "k-subdivision");
  sub->add_option("file", in, "TSF input")->required();
  sub->add_option("-k", k, "Subdivision factor")->check(CLI::Range(2, 64));
  sub->add_option("-o,--out", dest, "TSF output")->required();
  auto* dbl = app.add_subcommand("double", "Conformal double of a surface with boundary");
  dbl->add_option("file", in, "TSF input")->required();
  dbl->add_option("-o,--out", dest, "TSF output")->required();
  auto* iso = app.add_subcommand("iso", "Orientation-preserving isomorphism test");
  iso->add_option("a", in, "First TSF")->required();
  iso->add_option("b", in2, "Second TSF")->required();
  auto* rnd = app.add_subcommand("random", "Random closed connected gluing");
  rnd->add_option("-T", t, "Face count (even)")->required();
  rnd->add_option("--seed", seed, "RNG seed");
  rnd->add_option("-o,--out", dest, "TSF output")->required();
  auto* tran = app.add_subcommand("tran", "Translation structures, periods and local boundedness");
  tran->add_option("file", in, "TSF input")->required();
  auto* deg = app.add_subcommand("degree-bound", "Bounded-degree map S -> B(S) with certificate");
  deg->add_option("file", in, "TSF input")->required();
  deg->add_option("-o,--out", dest, "TSF output for B(S)");
  deg->add_option("--cert", cert, "Certificate output");
  auto* dec = app.add_subcommand("decompose", "Parallelogram decomposition of a translation surface");
  dec->add_option("file", in, "TSF input")->required();
  dec->add_option("--structure", structure, "Which of the six structures (0..5)");
  dec->add_option("--shuffle", shuffle, "Worklist shuffle seed");
  auto* cov = app.add_subcommand("cover", "Canonical 6-cover, one TSF per component plus manifest");
  cov->add_option("file", in, "TSF input")->required();
  cov->add_option("-o,--out-dir", dest, "Output directory")->required();
  auto* cen = app.add_subcommand("census", "Enumerate closed surfaces up to isomorphism");
  cen->add_option("--tmax", t, "Largest face count")->required();
  cen->add_option("--filter", filter, "Restrict to tran or lb surfaces")->check(CLI::IsMember({"tran", "lb"}));
  cen->add_option("--out", dest, "CSV output (stdout when omitted)");
  cen->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  cen->add_flag("--force", force, "Ignore the T cap");

  std::vector<const char*> argv{"equilat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    out << "RESULT: fail usage: " << e.what() << '\n';
    return 2;
  }

  try {
    Outcome r;
    if (*validate) r = cmd_validate(in, out);
    else if (*stats) r = cmd_stats(in, out);
    else if (*sub) r = cmd_subdivide(in, k, dest, out);
    else if (*dbl) r = cmd_double(in, dest, out);
    else if (*iso) r = cmd_iso(in, in2, out);
    else if (*rnd) r = cmd_random(t, seed, dest, out);
    else if (*tran) r = cmd_tran(in, out);
    else if (*deg) r = cmd_degree_bound(in, dest, cert, out);
    else if (*dec) r = cmd_decompose(in, structure, shuffle, out);
    else if (*cov) r = cmd_cover(in, dest, out);
    else r = cmd_census(t, filter, dest, jobs, force, out);
    out << "RESULT: " << (r.pass ? "pass " : "fail ") << r.summary << '\n';
    return r.pass ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    out << "RESULT: fail " << e.what() << '\n';
    return 2;
  }
}

}  // namespace equilat::cli
