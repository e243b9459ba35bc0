#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "equilat/census.hpp"
#include "equilat/translation.hpp"
#include "equilat/surface.hpp"
#include "support.hpp"

using namespace equilat;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;

  std::string first_line() const { return out.substr(0, out.find('\n')); }
  std::string last_line() const {
    const auto end = out.find_last_not_of('\n');
    const auto start = out.rfind('\n', end);
    return out.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
  }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("equilat_cli_" + std::to_string(std::rand()) + "_" +
                                         std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string put(const std::string& name, const GluedSurface& s) const {
    write_surface_file(file(name), s);
    return file(name);
  }

 private:
  fs::path path_;
};

GluedSurface genus2_translation_lb() {
  for (const auto& f : enumerate_surfaces(6)) {
    const GluedSurface s = load_surface(f);
    if (euler_and_genus(s).genus == 2 && !detect_structures(s).empty()) return subdivide(s, 3);
  }
  throw std::runtime_error("no genus 2 translation surface at T=6");
}

}  // namespace

TEST_CASE("stats") {
  TempDir dir;
  const Run r = run({"stats", dir.put("torus.tsf", hexagonal_torus())});
  CHECK(r.code == 0);
  CHECK(r.first_line() == "T=2 V=1 E=3 chi=0 g=1");
  CHECK(r.out.find("  6: 1\n") != std::string::npos);
  CHECK(r.last_line() == "RESULT: pass T=2 g=1");
}

TEST_CASE("validate") {
  TempDir dir;
  CHECK(run({"validate", dir.put("p.tsf", pillowcase())}).code == 0);
  {
    std::ofstream f(dir.file("bad.tsf"));
    f << "tsf v1\nT 1\ng 0 0\n";
  }
  const Run bad = run({"validate", dir.file("bad.tsf")});
  CHECK(bad.code == 2);
  CHECK(bad.last_line().rfind("RESULT: fail ", 0) == 0);
  CHECK(bad.err.find("glued to itself") != std::string::npos);
  const Run missing = run({"validate", dir.file("nope.tsf")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  CHECK(run({"validate", dir.put("two.tsf", disjoint_union(pillowcase(), pillowcase()))}).code == 1);
}

TEST_CASE("iso") {
  TempDir dir;
  const GluedSurface s = random_surface(14, 3);
  const Run same = run({"iso", dir.put("a.tsf", s), dir.put("b.tsf", testing_support::shuffled(s, 1))});
  CHECK(same.code == 0);
  CHECK(same.first_line() == "isomorphic");
  const Run diff = run({"iso", dir.put("t.tsf", hexagonal_torus()), dir.put("p.tsf", pillowcase())});
  CHECK(diff.code == 1);
  CHECK(diff.first_line() == "not isomorphic");
}

TEST_CASE("subdivide, double, random") {
  TempDir dir;
  CHECK(run({"subdivide", dir.put("t.tsf", hexagonal_torus()), "-k", "3", "-o", dir.file("t3.tsf")}).code == 0);
  CHECK(read_surface_file(dir.file("t3.tsf")).face_count() == 18);

  CHECK(run({"double", dir.put("tri.tsf", load_surface("tsf v1\nT 1\n")), "-o", dir.file("d.tsf")}).code == 0);
  CHECK(are_isomorphic(read_surface_file(dir.file("d.tsf")), pillowcase()));
  CHECK(run({"double", dir.file("t.tsf"), "-o", dir.file("x.tsf")}).code == 2);

  CHECK(run({"random", "-T", "20", "--seed", "4", "-o", dir.file("r1.tsf")}).code == 0);
  CHECK(run({"random", "-T", "20", "--seed", "4", "-o", dir.file("r2.tsf")}).code == 0);
  CHECK(read_surface_file(dir.file("r1.tsf")) == read_surface_file(dir.file("r2.tsf")));
  CHECK(read_surface_file(dir.file("r1.tsf")) == random_surface(20, 4));
  CHECK(run({"random", "-T", "7", "-o", dir.file("r3.tsf")}).code == 2);
}

TEST_CASE("tran") {
  TempDir dir;
  const Run t = run({"tran", dir.put("t.tsf", hexagonal_torus())});
  CHECK(t.code == 0);
  CHECK(t.first_line() == "structures: 6");
  CHECK(t.out.find("face types: A=1 B=1") != std::string::npos);
  CHECK(t.out.find("locally bounded: no") != std::string::npos);
  const Run p = run({"tran", dir.put("p.tsf", pillowcase())});
  CHECK(p.code == 1);
  CHECK(p.last_line() == "RESULT: fail no translation structure");
  const Run lb = run({"tran", dir.put("g2.tsf", genus2_translation_lb())});
  CHECK(lb.code == 0);
  CHECK(lb.out.find("locally bounded: yes") != std::string::npos);
}

TEST_CASE("degree-bound") {
  TempDir dir;
  const Run r = run({"degree-bound", dir.put("s.tsf", random_surface(10, 2)), "-o", dir.file("b.tsf"), "--cert",
                     dir.file("cert.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.last_line().rfind("RESULT: pass B(S)", 0) == 0);
  CHECK(VertexOrbits(read_surface_file(dir.file("b.tsf"))).max_degree() <= 7);
  std::ifstream cert(dir.file("cert.txt"));
  std::string first;
  std::getline(cert, first);
  CHECK(first.rfind("input T=10", 0) == 0);
}

TEST_CASE("decompose") {
  TempDir dir;
  const Run r = run({"decompose", dir.put("g2.tsf", genus2_translation_lb()), "--shuffle", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("  id   l   w") != std::string::npos);
  CHECK(r.last_line().rfind("RESULT: pass ", 0) == 0);
  const Run torus = run({"decompose", dir.put("t3.tsf", subdivide(hexagonal_torus(), 3))});
  CHECK(torus.code == 2);
  CHECK(torus.err.find("genus 1") != std::string::npos);
  CHECK(run({"decompose", dir.put("p.tsf", pillowcase())}).code == 2);
}

TEST_CASE("cover") {
  TempDir dir;
  const Run r = run({"cover", dir.put("t.tsf", hexagonal_torus()), "-o", dir.file("cov")});
  CHECK(r.code == 0);
  for (int i = 0; i < 6; ++i) CHECK(fs::exists(dir.file("cov/component_" + std::to_string(i) + ".tsf")));
  CHECK_FALSE(fs::exists(dir.file("cov/component_6.tsf")));
  std::ifstream f(dir.file("cov/manifest.txt"));
  std::stringstream manifest;
  manifest << f.rdbuf();
  const std::string text = manifest.str();
  std::size_t count = 0;
  for (auto pos = text.find(" degree 1 genus 1"); pos != std::string::npos; pos = text.find(" degree 1 genus 1", pos + 1))
    ++count;
  CHECK(count == 6);
  CHECK(text.find("FAIL") == std::string::npos);

  const Run p = run({"cover", dir.put("p.tsf", pillowcase()), "-o", dir.file("pc")});
  CHECK(p.code == 0);
  CHECK(p.out.find("component 1: degree 3 genus 1") != std::string::npos);
}

TEST_CASE("census") {
  TempDir dir;
  const Run r = run({"census", "--tmax", "4", "--out", dir.file("c.csv")});
  CHECK(r.code == 0);
  std::ifstream f(dir.file("c.csv"));
  std::stringstream csv;
  csv << f.rdbuf();
  CHECK(csv.str() == "T,genus,count,tran_count,lb_count\n2,0,2,0,0\n2,1,1,1,0\n4,0,6,0,0\n4,1,5,1,0\n");
  const Run tran = run({"census", "--tmax", "6", "--filter", "tran", "--jobs", "4"});
  CHECK(tran.code == 0);
  CHECK(tran.out.find("6,2,1,1,0\n") != std::string::npos);
  CHECK(run({"census", "--tmax", "6", "--filter", "bogus"}).code == 2);

  const Run big = run({"census", "--tmax", "12"});
  CHECK(big.code == 2);
  CHECK(big.err.find("cap") != std::string::npos);

  ::setenv("EQUILAT_MAX_T", "4", 1);
  CHECK(run({"census", "--tmax", "6"}).code == 2);
  CHECK(run({"census", "--tmax", "6", "--force"}).code == 0);
  ::setenv("EQUILAT_MAX_T", "six", 1);
  CHECK(run({"census", "--tmax", "2"}).code == 2);
  ::unsetenv("EQUILAT_MAX_T");
}

TEST_CASE("usage errors") {
  const Run r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.last_line().rfind("RESULT: fail usage", 0) == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"subdivide", "x.tsf"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
