#include "aitbench/table_store.hpp"

#include <filesystem>

namespace aitbench {

TableStore::TableStore(Budget budget, unsigned jobs, std::string cache_dir)
    : budget_(budget), jobs_(jobs), cache_dir_(std::move(cache_dir)) {}

std::string TableStore::cache_path(const BitString& z, Budget b) const {
  if (cache_dir_.empty()) return {};
  return cache_dir_ + "/z=" + z.serialize() + "_L" + std::to_string(b.max_len) + "_J" +
         std::to_string(b.max_jsteps) + (b.loop_check ? "" : "_noloops") + ".tbl";
}

const HaltingTable& TableStore::get(const BitString& z, Budget b) {
  std::lock_guard lock(mutex_);
  Key key{z.str(), b.max_len, b.max_jsteps, b.loop_check};
  auto it = tables_.find(key);
  if (it != tables_.end()) return *it->second;

  const std::string path = cache_path(z, b);
  std::unique_ptr<HaltingTable> t;
  if (!path.empty() && std::filesystem::exists(path)) {
    t = std::make_unique<HaltingTable>(HaltingTable::load(path));
    if (t->z() != z || !(t->budget() == b)) {
      throw Error(ErrorCode::IoError, "cache file does not match its name: " + path);
    }
  } else {
    t = std::make_unique<HaltingTable>(sweep(z, b, jobs_));
    if (!path.empty()) {
      std::filesystem::create_directories(cache_dir_);
      t->save(path);
    }
  }
  return *tables_.emplace(key, std::move(t)).first->second;
}

const HaltingTable& TableStore::insert(HaltingTable t) {
  std::lock_guard lock(mutex_);
  Key key{t.z().str(), t.budget().max_len, t.budget().max_jsteps, t.budget().loop_check};
  auto& slot = tables_[key];
  slot = std::make_unique<HaltingTable>(std::move(t));
  return *slot;
}

}  // namespace aitbench
