#ifndef LMD_LABELING_HPP
#define LMD_LABELING_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lmd/io.hpp"
#include "lmd/log_model.hpp"

namespace lmd {

struct LabeledAuthEvent {
  AuthEvent event;
  bool is_malicious = false;
};

// Exact join on (time, user, src_computer, dst_computer). The red-team set is
// tiny relative to the corpus and lives in memory; match counts let the
// summary surface red-team records that never joined.
class RedTeamIndex {
 public:
  RedTeamIndex() = default;

  explicit RedTeamIndex(const std::vector<RedTeamEvent>& records) {
    records_ = records;
    for (size_t i = 0; i < records_.size(); ++i) {
      keys_.emplace(key_of(records_[i].time, records_[i].user, records_[i].src_computer,
                           records_[i].dst_computer),
                    i);
    }
    match_counts_.assign(records_.size(), 0);
  }

  // True iff the event joins a red-team tuple; bumps that tuple's match count.
  bool label(const AuthEvent& e) {
    if (keys_.empty()) return false;
    auto it = keys_.find(key_of(e.time, e.src_user, e.src_computer, e.dst_computer));
    if (it == keys_.end()) return false;
    ++match_counts_[it->second];
    return true;
  }

  size_t size() const { return records_.size(); }

  std::vector<RedTeamEvent> unmatched() const {
    std::vector<RedTeamEvent> out;
    for (size_t i = 0; i < records_.size(); ++i)
      if (match_counts_[i] == 0) out.push_back(records_[i]);
    return out;
  }

 private:
  static uint64_t key_of(int64_t time, const std::string& user, const std::string& src,
                         const std::string& dst) {
    uint64_t h = fnv1a64(&time, sizeof(time));
    h = fnv1a64(user, h);
    h = fnv1a64("|", h);
    h = fnv1a64(src, h);
    h = fnv1a64("|", h);
    h = fnv1a64(dst, h);
    return h;
  }

  std::vector<RedTeamEvent> records_;
  std::unordered_multimap<uint64_t, size_t> keys_;
  std::vector<uint64_t> match_counts_;
};

struct LabelSummary {
  uint64_t total_events = 0;
  uint64_t malicious = 0;
  uint64_t redteam_records = 0;
  uint64_t unmatched_redteam = 0;
};

}  // namespace lmd

#endif  // LMD_LABELING_HPP
