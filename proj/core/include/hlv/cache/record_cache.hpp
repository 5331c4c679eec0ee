#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace hlv {

// Line-oriented persistent cache. The file starts with a header line, then one
// record per line: "<key fields>;<payload>;<crc32>". The key consists of a
// fixed number of ';'-separated fields, the payload may itself contain ';',
// and the checksum covers everything before it. Records failing the checksum
// are ignored (and dropped at the next write). Writes rewrite the whole file
// through a temporary file and an atomic rename.
class RecordCache {
 public:
  RecordCache(std::filesystem::path file, std::string header, int key_fields);

  [[nodiscard]] const std::filesystem::path& path() const { return file_; }

  std::optional<std::string> get(const std::string& key);
  // Returns false (after printing a warning once) if the file cannot be written.
  bool put(const std::string& key, const std::string& payload);
  std::string get_or_compute(const std::string& key, const std::function<std::string()>& producer);

  // Number of records rejected by checksum or format in the latest read of the file.
  [[nodiscard]] int rejected() const { return rejected_; }

  static std::string checksum(const std::string& text);

 private:
  void load_locked();
  bool write_locked();

  std::filesystem::path file_;
  std::string header_;
  int key_fields_;
  std::mutex mutex_;
  bool loaded_ = false;
  bool write_failed_ = false;
  int rejected_ = 0;
  std::map<std::string, std::string> records_;
};

}  // namespace hlv
