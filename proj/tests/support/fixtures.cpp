#include "fixtures.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace summpip::testing {

std::filesystem::path data_dir() { return SUMMPIP_TEST_RESOURCE_DIR; }
std::filesystem::path test_data_dir() { return SUMMPIP_TEST_DATA_DIR; }

ResourcePaths shipped_paths() {
  auto p = ResourcePaths::in_directory(data_dir());
  p.vectors = test_data_dir() / "news_vectors.txt";
  return p;
}

const Resources& shipped_resources() {
  static const Resources resources = load_resources(shipped_paths());
  return resources;
}

PipelineConfig test_config() {
  PipelineConfig c;
  c.resources = shipped_paths();
  return c;
}

Sentence make_sentence(const std::string& text, std::size_t doc, std::size_t sent, std::size_t global) {
  const auto& r = shipped_resources();
  Sentence s;
  s.text = text;
  s.tokens = tokenize(text, r.stopwords, r.abbreviations);
  s.doc_index = doc;
  s.sent_index = sent;
  s.global_index = global;
  return s;
}

std::vector<Sentence> make_document(const std::vector<std::string>& texts, std::size_t doc,
                                    std::size_t first_global) {
  std::vector<Sentence> out;
  for (std::size_t i = 0; i < texts.size(); ++i) out.push_back(make_sentence(texts[i], doc, i, first_global + i));
  return out;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("summpip-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace summpip::testing
