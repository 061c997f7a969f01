#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "support.hpp"

#include "adfbn/io.hpp"
#include "adfbn/solver.hpp"

using namespace adfbn;
namespace fs = std::filesystem;

namespace {

const fs::path corpus = ADFBN_CORPUS_DIR;

std::vector<Interpretation> read_expected(const fs::path& path) {
  std::vector<Interpretation> out;
  std::istringstream in(read_file(path));
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(Interpretation::from_string(line));
  return out;
}

std::vector<fs::path> instances() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(corpus))
    if (e.is_regular_file() && format_from_path(e.path())) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("bundled corpus stays small") {
  const auto files = instances();
  CHECK(files.size() >= 10);
  CHECK(files.size() <= 15);
  for (const auto& f : files) CHECK(load_input(f).framework.size() <= 12);
}

TEST_CASE("recorded outputs match both methods") {
  for (const auto& f : instances()) {
    CAPTURE(f.filename().string());
    const auto expected_path = corpus / "expected" / (f.filename().string() + ".preferred");
    REQUIRE(fs::exists(expected_path));
    const auto expected = read_expected(expected_path);
    const auto input = load_input(f);
    CHECK(preferred_interpretations_bruteforce(input.framework) == expected);
    CHECK(enumerate_preferred(input.framework) == expected);
    if (input.dung) {
      std::set<std::uint64_t> from_labelings;
      for (const auto& v : expected) from_labelings.insert(state_index(input.dung->extension_from_labeling(v)));
      CHECK(from_labelings == fixtures::as_set(fixtures::indices(input.dung->preferred_extensions())));
    }
  }
}

TEST_CASE("formats of the running example agree") {
  const auto apx = load_input(corpus / "running_example.apx").framework;
  const auto adf = load_input(corpus / "running_example.adf").framework;
  const auto bnet = load_input(corpus / "running_example.bnet").framework;
  for (std::uint64_t x = 0; x < 16; ++x) {
    CHECK(apx.update_index(x) == adf.update_index(x));
    CHECK(apx.update_index(x) == bnet.update_index(x));
  }
}
