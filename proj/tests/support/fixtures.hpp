#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "summpip/ingest.hpp"
#include "summpip/pipeline.hpp"
#include "summpip/resources.hpp"

namespace summpip::testing {

std::filesystem::path data_dir();       // shipped resources
std::filesystem::path test_data_dir();  // tests/data

/// Shipped resources plus the small test vectors; loaded once.
const Resources& shipped_resources();
ResourcePaths shipped_paths();

/// Pipeline config pointing at the shipped resources and test vectors.
PipelineConfig test_config();

/// Tokenizes `text` as one sentence with the shipped stopwords.
Sentence make_sentence(const std::string& text, std::size_t doc = 0, std::size_t sent = 0, std::size_t global = 0);

/// Sentences of one document, indices filled in order.
std::vector<Sentence> make_document(const std::vector<std::string>& texts, std::size_t doc = 0,
                                    std::size_t first_global = 0);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace summpip::testing
