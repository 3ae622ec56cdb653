#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string(MOUFANG_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / "moufang_test_cli";
  TempDir() {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("gen") {
  TempDir dir;
  CHECK(cli("gen octonion:2 --out " + dir / "o16.tbl").status == 0);
  std::ifstream in(dir / "o16.tbl");
  std::stringstream text;
  text << in.rdbuf();
  CHECK(line_count(text.str()) == 17);
  CHECK(first_line(text.str()) == "16");
  CHECK(cli("gen cyclic:1").out == "1\n0\n");
  CHECK(cli("gen quaternion:1").status == 2);
  CHECK(cli("gen nonsense:3").status == 2);
}

TEST_CASE("check") {
  TempDir dir;
  cli("gen octonion:2 --out " + dir / "o16.tbl");
  const Run o16 = cli("check " + dir / "o16.tbl");
  CHECK(o16.status == 0);
  CHECK(o16.out.find("moufang=true associative=false unique-2-subloop=true") != std::string::npos);
  cli("gen cyclic:6 --out " + dir / "z6.tbl");
  CHECK(cli("check " + dir / "z6.tbl").out.find("exponent=6") != std::string::npos);

  std::ofstream(dir / "bad.tbl") << "2\n0 1\n1 x\n";
  const std::string err = dir / "err.txt";
  CHECK(std::system((std::string(MOUFANG_CLI_PATH) + " check " + dir / "bad.tbl" + " 2>" + err).c_str()) != 0);
  std::ifstream e(err);
  std::stringstream msg;
  msg << e.rdbuf();
  CHECK(msg.str().find("ParseError: line 3") != std::string::npos);
}

TEST_CASE("powergraph") {
  TempDir dir;
  cli("gen octonion:2 --out " + dir / "o16.tbl");
  cli("gen cyclic:5 --out " + dir / "z5.tbl");
  cli("gen cyclic:2 --out " + dir / "z2.tbl");
  const Run o16 = cli("powergraph " + dir / "o16.tbl");
  CHECK(first_line(o16.out) == "16 36 0");
  CHECK(line_count(o16.out) == 37);
  CHECK(first_line(cli("powergraph " + dir / "z5.tbl").out) == "5 10 0");
  CHECK(cli("powergraph --directed " + dir / "z2.tbl").out == "2 1 1\n1 0\n");
  const Run dot = cli("powergraph --format dot --recipe octonion:2 " + dir / "o16.tbl");
  CHECK(dot.out.rfind("graph", 0) == 0);
  CHECK(dot.out.find("a^2u") != std::string::npos);
  CHECK(cli("powergraph --format tbl " + dir / "z2.tbl").status == 2);
}

TEST_CASE("iso, identify and reconstruct") {
  TempDir dir;
  cli("gen octonion:2 --out " + dir / "o16.tbl");
  cli("gen quaternion:4 --out " + dir / "q16.tbl");
  cli("powergraph " + dir / "o16.tbl --out " + dir / "o16.edg");
  cli("powergraph " + dir / "q16.tbl --out " + dir / "q16.edg");
  const Run same = cli("iso --mode graph " + dir / "o16.edg " + dir / "o16.edg");
  CHECK(same.status == 0);
  CHECK(same.out == "ISOMORPHIC\n");
  CHECK(cli("iso --mode graph " + dir / "o16.edg " + dir / "q16.edg").status == 1);
  CHECK(cli("iso --mode loop " + dir / "o16.tbl " + dir / "o16.tbl").status == 0);
  CHECK(cli("identify " + dir / "o16.edg").out == "GeneralizedOctonion(16)\n");
  CHECK(cli("identify " + dir / "q16.edg").out == "GeneralizedQuaternion(16)\n");
  const Run rec = cli("reconstruct --max-order 16 " + dir / "o16.edg --out " + dir / "o16.dir.edg");
  CHECK(rec.status == 0);
  cli("powergraph --directed " + dir / "o16.tbl --out " + dir / "o16.d.edg");
  CHECK(cli("iso --mode digraph " + dir / "o16.dir.edg " + dir / "o16.d.edg").status == 0);
  std::ofstream(dir / "c5.edg") << "5 5 0\n0 1\n1 2\n2 3\n3 4\n4 0\n";
  CHECK(cli("reconstruct --max-order 16 " + dir / "c5.edg").status == 2);
}

TEST_CASE("verify") {
  TempDir dir;
  const Run main = cli("verify main 16");
  CHECK(main.status == 0);
  CHECK(main.out.find("fail=0") != std::string::npos);
  const Run lemma = cli("verify order-lemma --max-order 32 --out " + dir / "lemma.txt");
  CHECK(lemma.status == 0);
  CHECK(lemma.out.find("# suite=order-lemma") != std::string::npos);
  CHECK(fs::file_size(dir / "lemma.txt") > 1000);
  CHECK(cli("verify classify 16").status == 0);
  CHECK(cli("verify genoct 32").status == 0);
  CHECK(cli("verify bogus").status == 2);
  CHECK(cli("verify main 65").status == 2);
}

TEST_CASE("octonion") {
  const Run r = cli("octonion 2");
  CHECK(r.status == 0);
  CHECK(first_line(r.out) == "0 1 0 0 0 0 0 0 0");
  CHECK(cli("octonion 2 --eps 1.5").status == 2);
  CHECK(cli("octonion 1").status == 2);
}
