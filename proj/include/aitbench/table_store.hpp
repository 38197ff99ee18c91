#pragma once

#include "aitbench/enumeration.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

namespace aitbench {

// Halting tables keyed by (z, budget), swept on first use. With a cache
// directory, tables are read from and written to `<dir>/z=<bits>_L<L>_J<J>.tbl`
// (`_noloops` before the suffix when loop_check is off).
class TableStore {
 public:
  explicit TableStore(Budget budget, unsigned jobs = 1, std::string cache_dir = {});

  const Budget& budget() const noexcept { return budget_; }
  unsigned jobs() const noexcept { return jobs_; }

  const HaltingTable& get(const BitString& z) { return get(z, budget_); }
  const HaltingTable& get(const BitString& z, Budget b);
  const HaltingTable& unconditional() { return get(BitString()); }
  // Registers a prebuilt table (e.g. loaded from a primary cache file).
  const HaltingTable& insert(HaltingTable t);

  std::string cache_path(const BitString& z, Budget b) const;

 private:
  using Key = std::tuple<std::string, std::size_t, std::uint64_t, bool>;
  Budget budget_;
  unsigned jobs_;
  std::string cache_dir_;
  std::mutex mutex_;
  std::map<Key, std::unique_ptr<HaltingTable>> tables_;
};

}  // namespace aitbench
