#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <unistd.h>

#include "cgw_cli/cache.hpp"
#include "cgw_cli/cli.hpp"

namespace fs = std::filesystem;
using namespace cgw::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args,
           std::map<std::string, std::string> env = {}) {
  std::ostringstream out, err;
  EnvLookup lookup = [env](const std::string& k) -> std::optional<std::string> {
    auto it = env.find(k);
    if (it == env.end()) return std::nullopt;
    return it->second;
  };
  int code = run(args, out, err, lookup);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Lines not starting with '#'.
std::string body(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != '#') out += line + "\n";
  }
  return out;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("cgw-cli-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::permissions(path, fs::perms::owner_all, fs::perm_options::add, ec);
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("growth table") {
    auto r = cli({"growth", "--group", "free(2)", "--radius", "3"});
    CHECK(r.code == kOk);
    CHECK(body(r.out) == "n,value\n0,1\n1,5\n2,17\n3,53\n");
    CHECK(r.out.find("# tool: cgw " + version()) != std::string::npos);
    auto j = cli({"conj-growth", "--group", "free(2)", "--radius", "2",
                  "--format", "json"});
    CHECK(j.code == kOk);
    CHECK(j.out.find("\"values\"") != std::string::npos);
  }

  TEST_CASE("reduce") {
    auto r = cli({"reduce", "--group", "hnn(free(2), a='x', b='y')", "--word",
                  "t^-1*x^2*t"});
    CHECK(r.code == kOk);
    CHECK(r.out == "y^2\n");
  }

  TEST_CASE("compare") {
    auto r = cli({"compare", "--f", "exp(2)", "--g", "exp(2)", "--samples", "10",
                  "--cmax", "3"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("\"relation\": \"equiv\"") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(cli({"growth", "--group", "bogus(1)", "--radius", "2"}).code ==
          kInputError);
    auto syntax = cli({"growth", "--group", "free(", "--radius", "2"});
    CHECK(syntax.code == kInputError);
    CHECK(syntax.err.find("offset 5") != std::string::npos);
    CHECK(cli({"growth", "--group", "free(2)", "--radius", "12", "--budget",
               "1000"})
              .code == kBudgetExceeded);
    CHECK(cli({"no-such-command"}).code == kInputError);
    CHECK(cli({"prim-growth", "--group", "hnn(free(2), a='x', b='y')",
               "--radius", "2"})
              .code == kInputError);
  }

  TEST_CASE("cache round trip and corruption") {
    TempDir dir;
    std::vector<std::string> args{"growth", "--group", "free(2)", "--radius",
                                  "4", "--cache", dir.path.string()};
    auto first = cli(args);
    REQUIRE(first.code == kOk);
    std::vector<fs::path> entries;
    for (const auto& f : fs::directory_iterator(dir.path)) {
      if (f.path().extension() != ".lock") entries.push_back(f.path());
    }
    REQUIRE(entries.size() == 1);
    auto second = cli(args);
    CHECK(second.code == kOk);
    CHECK(second.out == first.out);
    CHECK(second.err.empty());

    std::string text = slurp(entries[0]);
    text[text.size() - 3] ^= 1;
    std::ofstream(entries[0], std::ios::binary | std::ios::trunc) << text;
    auto third = cli(args);
    CHECK(third.code == kOk);
    CHECK(third.out == first.out);
    CHECK_FALSE(third.err.empty());
    // The recomputed entry replaced the damaged one.
    auto fourth = cli(args);
    CHECK(fourth.err.empty());
  }

  TEST_CASE("cache versions") {
    TempDir dir;
    std::ostringstream warn;
    Cache a(dir.path, "1.0.0", warn);
    Cache b(dir.path, "1.0.1", warn);
    REQUIRE(a.enabled());
    auto key = a.key("free(2)", "growth", "radius=3");
    CHECK(key == a.key("free(2)", "growth", "radius=3"));
    CHECK(key != b.key("free(2)", "growth", "radius=3"));
    CHECK(key != a.key("free(2)", "growth", "radius=4"));
    a.store(key, "payload");
    CHECK(a.load(key) == std::optional<std::string>("payload"));
    CHECK_FALSE(b.load(key).has_value());
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }

  TEST_CASE("unwritable cache directory") {
    if (::geteuid() == 0) {
      // Permission bits do not bind root; use a path below a regular file.
      TempDir dir;
      std::ofstream(dir.path / "file") << "x";
      auto r = cli({"growth", "--group", "free(2)", "--radius", "2", "--cache",
                    (dir.path / "file" / "sub").string()});
      CHECK(r.code == kOk);
      CHECK(r.err.find("warning") != std::string::npos);
      CHECK(body(r.out) == "n,value\n0,1\n1,5\n2,17\n");
      return;
    }
    TempDir dir;
    fs::permissions(dir.path, fs::perms::owner_read | fs::perms::owner_exec);
    auto r = cli({"growth", "--group", "free(2)", "--radius", "2", "--cache",
                  dir.path.string()});
    CHECK(r.code == kOk);
    CHECK(r.err.find("warning") != std::string::npos);
  }

  TEST_CASE("plot files") {
    TempDir dir;
    auto plot = (dir.path / "g.dat").string();
    auto r = cli({"growth", "--group", "free(2)", "--radius", "2", "--plot", plot});
    REQUIRE(r.code == kOk);
    CHECK(body(slurp(plot)) == "0 1\n1 5\n2 17\n");
    CHECK(fs::exists(plot + ".ln"));
    auto b = cli({"conj-growth", "--group", "hnn(free(2), a='x', b='y')",
                  "--radius", "2", "--plot", plot});
    REQUIRE(b.code == kOk);
    std::istringstream rows(body(slurp(plot)));
    std::string line;
    while (std::getline(rows, line)) {
      std::istringstream cols(line);
      std::uint64_t n, lo, hi;
      REQUIRE(static_cast<bool>(cols >> n >> lo >> hi));
      CHECK(lo <= hi);
    }
  }

  TEST_CASE("threads and environment") {
    std::vector<std::string> base{"conj-growth", "--group", "free(2)",
                                  "--radius", "5"};
    auto one = cli(base);
    auto args = base;
    args.insert(args.end(), {"--threads", "2"});
    auto two = cli(args);
    CHECK(one.out == two.out);
    auto env = cli(base, {{"CGW_THREADS", "2"}});
    CHECK(env.out == one.out);
    CHECK(cli(base, {{"CGW_THREADS", "zero"}}).code == kInputError);
    // The flag wins over the variable.
    CHECK(cli(args, {{"CGW_THREADS", "zero"}}).code == kOk);

    TempDir dir;
    auto cached = cli(base, {{"CGW_CACHE", dir.path.string()}});
    CHECK(cached.code == kOk);
    CHECK_FALSE(fs::is_empty(dir.path));
  }
}
