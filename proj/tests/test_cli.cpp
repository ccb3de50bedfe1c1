#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "hdo/bmm.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

class Sandbox {
 public:
  Sandbox() {
    dir_ = fs::temp_directory_path() / ("hdo_cli_test_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter_++));
    fs::create_directories(dir_);
  }
  ~Sandbox() { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& data) const {
    std::ofstream(path(name), std::ios::binary) << data;
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Run run(const std::string& args) const {
    const std::string cmd =
        std::string(HDO_CLI_PATH) + " " + args + " > " + path("stdout") + " 2> " + path("stderr");
    const int status = std::system(cmd.c_str());
    return Run{WIFEXITED(status) ? WEXITSTATUS(status) : -1, read("stdout")};
  }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

std::string random_bytes(std::mt19937_64& rng, std::size_t n, int alphabet) {
  std::string s(n, 'a');
  for (auto& c : s) c = static_cast<char>('a' + rng() % alphabet);
  return s;
}

}  // namespace

TEST_CASE("cli build and query") {
  Sandbox box;
  std::mt19937_64 rng(81);
  box.write("s", random_bytes(rng, 1024, 4));
  box.write("t", random_bytes(rng, 1024, 4));

  const auto built = box.run("build --s " + box.path("s") + " --t " + box.path("t") +
                             " --format raw --x 32 --out " + box.path("o.hdo"));
  REQUIRE(built.code == 0);
  CHECK(built.out.find("rows_built=32\n") != std::string::npos);
  CHECK(built.out.find("cells_stored=32768\n") != std::string::npos);
  CHECK(built.out.find("n=1024\n") != std::string::npos);

  const std::string s = box.read("s"), t = box.read("t");
  std::size_t i = 0, j = 0;
  while (s[i] != t[j]) ++j;
  auto q = box.run("query --oracle " + box.path("o.hdo") + " --sub " + std::to_string(i) + " " +
                   std::to_string(j) + " 1");
  CHECK(q.code == 0);
  CHECK(q.out == "0\n");

  std::uint64_t want = 0;
  for (std::size_t k = 0; k < 100; ++k) want += s[10 + k] != t[20 + k];
  q = box.run("query --oracle " + box.path("o.hdo") + " --sub 10 20 100");
  CHECK(q.out == std::to_string(want) + "\n");

  CHECK(box.run("query --oracle " + box.path("o.hdo") + " --sub 1000 0 30").code == 1);
  CHECK(box.run("query --oracle " + box.path("o.hdo") + " --suffix 1024 0").code == 1);
  CHECK(box.run("query --oracle " + box.path("missing") + " --suffix 0 0").code == 1);
  box.write("junk", "not an oracle");
  CHECK(box.run("query --oracle " + box.path("junk") + " --suffix 0 0").code == 1);
}

TEST_CASE("cli suffix query on identical inputs") {
  Sandbox box;
  box.write("s", "7 8 9 1000000 7\n");
  const auto built = box.run("build --s " + box.path("s") + " --t " + box.path("s") +
                             " --format tokens --x 2 --engine hybrid --out " + box.path("o"));
  REQUIRE(built.code == 0);
  for (int i = 0; i < 5; ++i) {
    CHECK(box.run("query --oracle " + box.path("o") + " --suffix " + std::to_string(i) + " " +
                  std::to_string(i)).out == "0\n");
  }
}

TEST_CASE("cli usage and resource errors") {
  Sandbox box;
  box.write("s", "abcabc");
  const std::string texts = " --s " + box.path("s") + " --t " + box.path("s");
  CHECK(box.run("build" + texts + " --x 0 --out " + box.path("o")).code == 1);
  CHECK(box.run("build --s " + box.path("nope") + " --t " + box.path("s") + " --x 1 --out " + box.path("o")).code == 1);
  CHECK(box.run("build" + texts + " --x 1 --engine magic --out " + box.path("o")).code == 1);
  CHECK(box.run("build" + texts + " --x 1 --cell-budget 10 --out " + box.path("o")).code == 2);
  CHECK(box.run("").code == 1);
  box.write("bad", "1 2 x");
  CHECK(box.run("build --s " + box.path("bad") + " --t " + box.path("s") +
                " --format tokens --x 1 --out " + box.path("o")).code == 1);
}

TEST_CASE("cli sweep") {
  Sandbox box;
  std::mt19937_64 rng(82);
  box.write("s", random_bytes(rng, 4096, 2));
  box.write("t", random_bytes(rng, 4096, 2));
  const std::string texts = " --s " + box.path("s") + " --t " + box.path("t");

  auto r = box.run("sweep" + texts + " --xs 1,16,256 --queries 50 --seed 3 --csv " + box.path("a.csv") +
                   " --cell-budget 20000000");
  REQUIRE(r.code == 0);
  const std::string csv = box.read("a.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.rfind("x,rows_built,cells_stored,conv_transform_length_total,marking_ops,"
                  "build_char_comparisons,avg_query_char_comparisons,build_wall_ns,avg_query_wall_ns\n",
                  0) == 0);

  r = box.run("sweep" + texts + " --xs 64 --queries 0 --seed 3 --csv " + box.path("b.csv"));
  CHECK(r.code == 0);
  const std::string b = box.read("b.csv");
  const std::string row = b.substr(b.find('\n') + 1);
  CHECK(row.rfind("64,64,262144,", 0) == 0);
  CHECK(row.find(",0.000000,") != std::string::npos);
  CHECK(row.substr(row.size() - 3) == ",0\n");

  r = box.run("sweep" + texts + " --xs 8 --queries 200 --seed 3 --inject-fault --csv " + box.path("c.csv"));
  CHECK(r.code == 3);

  r = box.run("sweep" + texts + " --xs 1,512 --queries 10 --seed 3 --cell-budget 1000000 --csv " + box.path("d.csv"));
  CHECK(r.code == 2);
  const std::string d = box.read("d.csv");
  CHECK(std::count(d.begin(), d.end(), '\n') == 2);

  CHECK(box.run("sweep" + texts + " --xs 1,x --queries 1 --seed 1 --csv " + box.path("e.csv")).code == 1);
}

TEST_CASE("cli bmm") {
  Sandbox box;
  std::mt19937_64 rng(83);
  hdo::BooleanMatrix b(32, 32), a(32, 32);
  for (std::size_t r = 0; r < 32; ++r)
    for (std::size_t c = 0; c < 32; ++c) {
      a.set(r, c, rng() % 5 == 0);
      b.set(r, c, rng() % 5 == 0);
    }
  box.write("i", hdo::render_matrix(hdo::BooleanMatrix::identity(32)));
  box.write("z", hdo::render_matrix(hdo::BooleanMatrix(32, 32)));
  box.write("a", hdo::render_matrix(a));
  box.write("b", hdo::render_matrix(b));

  auto r = box.run("bmm --a " + box.path("i") + " --b " + box.path("b") + " --variant ternary --x-oracle 7 --out " + box.path("ib"));
  CHECK(r.code == 0);
  CHECK(r.out == "mismatches_vs_naive=0\n");
  CHECK(box.read("ib") == box.read("b"));

  r = box.run("bmm --a " + box.path("z") + " --b " + box.path("b") + " --variant binary --x-oracle 3 --out " + box.path("zb"));
  CHECK(r.code == 0);
  CHECK(box.read("zb") == box.read("z"));

  r = box.run("bmm --a " + box.path("a") + " --b " + box.path("b") + " --variant binary --x-oracle 16 --out " + box.path("ab"));
  CHECK(r.code == 0);
  CHECK(r.out == "mismatches_vs_naive=0\n");
  CHECK(hdo::parse_matrix(box.read("ab")) == hdo::bmm_naive(a, b));

  box.write("wide", "1 3\n101\n");
  CHECK(box.run("bmm --a " + box.path("wide") + " --b " + box.path("b") + " --out " + box.path("x")).code == 1);
  box.write("broken", "2 2\n12\n00\n");
  CHECK(box.run("bmm --a " + box.path("broken") + " --b " + box.path("b") + " --out " + box.path("x")).code == 1);
}
