#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "fracspec_cli_test";

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Result run(const std::string& args, const char* binary = FRACSPEC_CLI) {
  const auto out = kWork / "stdout";
  const auto err = kWork / "stderr";
  const std::string command = std::string("'") + binary + "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(command.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string write(const std::string& name, const std::string& content) {
  const auto p = kWork / name;
  std::ofstream(p) << content;
  return p.string();
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

const std::string kFasta = std::string(FRACSPEC_DATA_DIR) + "/4gax_chain_a.fasta";

struct Workspace {
  Workspace() {
    fs::remove_all(kWork);
    fs::create_directories(kWork);
  }
  ~Workspace() { fs::remove_all(kWork); }
};

}  // namespace

TEST_CASE("spectrum of the hand fixture") {
  Workspace ws;
  const auto input = write("x.txt", "1 2 3 4 5 6\n");
  const auto r = run("spectrum " + input + " --l 3");
  CHECK(r.code == 0);
  CHECK(r.out == "modulus,k,period_rational,period_decimal,fps\n3,1,3/1,3.0,12\n");

  const auto json = run("spectrum " + input + " --l 3 --format json");
  REQUIRE(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["rows"][0]["fps"] == 12);
  CHECK(doc["folds"] == 2);
}

TEST_CASE("usage errors exit 1") {
  Workspace ws;
  const auto input = write("x.txt", "1 2 3 4 5 6\n");
  CHECK(run("spectrum " + input + " --l 1").code == 1);
  CHECK(run("scan " + input + " --l-min 5 --l-max 4").code == 1);
  CHECK(run("spectrum " + input).code == 1);
  CHECK(run("spectrum " + input + " --l 3 --format xml").code == 1);
  CHECK(run("spectrum " + (kWork / "missing.txt").string() + " --l 3").code == 1);
  const auto bad = write("bad.txt", "1 2 oops\n");
  const auto r = run("spectrum " + bad + " --l 3");
  CHECK(r.code == 1);
  CHECK(r.err.find("token 3") != std::string::npos);
  CHECK(run("").code == 1);
}

TEST_CASE("constant input warns on scan") {
  Workspace ws;
  std::string text;
  for (int i = 0; i < 60; ++i) text += "7\n";
  const auto input = write("flat.txt", text);
  const auto r = run("scan " + input + " --l-min 2 --l-max 6");
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("verify") {
  Workspace ws;
  const auto input = write("x.txt", "3 -1 4 1 -5 9 2 -6 5 3 5\n");
  const auto ok = run("verify " + input + " --l 5 --k 2");
  CHECK(ok.code == 0);
  CHECK(ok.out.find(",true\n") != std::string::npos);
  const auto broken = run("verify " + input + " --l 5 --k 2", FRACSPEC_CLI_FAULTY);
  CHECK(broken.code == 2);
  CHECK(broken.out.find(",false\n") != std::string::npos);
  CHECK(run("verify " + input + " --l 5 --k 5").code == 1);
}

TEST_CASE("hydropathy spectrum of the protein fixture") {
  Workspace ws;
  const auto r = run("spectrum " + kFasta + " --map hydropathy --l 18 --format json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["peak"]["k"] == 5);
  CHECK(doc["peak"]["period_decimal"] == "3.6");
  CHECK(doc["rows"].size() == 9);

  // Per-modulus peaks inside a scan. The global top entry depends on the exact chain sequence.
  const auto scan = run("scan " + kFasta + " --map hydropathy --l-min 2 --l-max 36 --top 1 --threads 3 --format json");
  REQUIRE(scan.code == 0);
  const auto report = nlohmann::json::parse(scan.out);
  REQUIRE(report["spectra"].size() == 35);
  CHECK(report["peaks"].size() == 1);
  CHECK(report["spectra"][16]["modulus"] == 18);
  CHECK(report["spectra"][16]["peak"]["period_decimal"] == "3.6");
  CHECK(report["spectra"][34]["modulus"] == 36);
  CHECK(report["spectra"][34]["peak"]["k"] == 10);
}

TEST_CASE("SVG chart is deterministic and has one bar per k") {
  Workspace ws;
  const auto a = (kWork / "a.svg").string();
  const auto b = (kWork / "b.svg").string();
  REQUIRE(run("spectrum " + kFasta + " --map hydropathy --l 18 --svg " + a).code == 0);
  REQUIRE(run("spectrum " + kFasta + " --map hydropathy --l 18 --svg " + b).code == 0);
  const auto svg = slurp(a);
  CHECK(count_of(svg, "<rect x=") == 9);
  CHECK(svg == slurp(b));
}

TEST_CASE("failed runs leave no output file") {
  Workspace ws;
  const auto input = write("x.txt", "1 2 3 4 5 6\n");
  const auto target = kWork / "report.csv";
  CHECK(run("spectrum " + input + " --l 1 --out " + target.string()).code == 1);
  CHECK_FALSE(fs::exists(target));
  CHECK(run("spectrum " + input + " --l 3 --out " + (kWork / "no" / "dir.csv").string()).code == 1);
  CHECK(run("spectrum " + input + " --l 3 --out " + target.string()).code == 0);
  CHECK(slurp(target).ends_with("3,1,3/1,3.0,12\n"));
}

TEST_CASE("bench smoke run") {
  Workspace ws;
  const auto r = run("bench --m 500,1000 --l 18 --repeats 3");
  REQUIRE(r.code == 0);
  CHECK(r.out.starts_with("m,l,method,trig_count,madd_count,ns_median,checksum\n"));
  CHECK(count_of(r.out, "\n") == 5);
  CHECK(count_of(r.out, ",folded,10,") == 2);
  CHECK(run("bench --repeats 2").code == 1);
}
