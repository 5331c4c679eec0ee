#include "hlv/cache/record_cache.hpp"

#include <boost/crc.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

namespace hlv {

RecordCache::RecordCache(std::filesystem::path file, std::string header, int key_fields)
    : file_(std::move(file)), header_(std::move(header)), key_fields_(key_fields) {}

std::string RecordCache::checksum(const std::string& text) {
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", crc.checksum());
  return buf;
}

void RecordCache::load_locked() {
  records_.clear();
  rejected_ = 0;
  loaded_ = true;
  std::ifstream in(file_);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line) || line != header_) {
    // Unknown version or foreign file: treat as empty, it is rewritten on put.
    if (!line.empty()) ++rejected_;
    return;
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto last = line.rfind(';');
    if (last == std::string::npos) {
      ++rejected_;
      continue;
    }
    const std::string body = line.substr(0, last);
    if (checksum(body) != line.substr(last + 1)) {
      ++rejected_;
      continue;
    }
    std::size_t pos = 0;
    bool ok = true;
    for (int f = 0; f < key_fields_; ++f) {
      pos = body.find(';', pos);
      if (pos == std::string::npos) {
        ok = false;
        break;
      }
      ++pos;
    }
    if (!ok) {
      ++rejected_;
      continue;
    }
    records_[body.substr(0, pos - 1)] = body.substr(pos);
  }
}

bool RecordCache::write_locked() {
  std::error_code ec;
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path(), ec);
  auto tmp = file_;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    out << header_ << '\n';
    for (const auto& [key, payload] : records_) {
      const std::string body = key + ";" + payload;
      out << body << ';' << checksum(body) << '\n';
    }
    if (!out.flush()) return false;
  }
  std::filesystem::rename(tmp, file_, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

std::optional<std::string> RecordCache::get(const std::string& key) {
  std::lock_guard lock(mutex_);
  if (!loaded_) load_locked();
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

bool RecordCache::put(const std::string& key, const std::string& payload) {
  std::lock_guard lock(mutex_);
  // Merge with whatever other writers stored since we last looked.
  load_locked();
  records_[key] = payload;
  if (write_failed_) return false;
  if (!write_locked()) {
    write_failed_ = true;
    std::cerr << "warning: cannot write cache file " << file_ << "; continuing without cache\n";
    return false;
  }
  return true;
}

std::string RecordCache::get_or_compute(const std::string& key, const std::function<std::string()>& producer) {
  if (auto hit = get(key)) return *hit;
  std::string value = producer();
  put(key, value);
  return value;
}

}  // namespace hlv
