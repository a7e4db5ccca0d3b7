#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "f2sand/harness.hpp"
#include "f2sand/json_io.hpp"

namespace f2sand {

nlohmann::json InstanceRecord::to_json() const {
  nlohmann::json out = {{"instance", multiplicity_to_json(instance)},
                        {"predicted", predicted},
                        {"observed", observed},
                        {"agree", agree}};
  if (flagged) out["flagged"] = true;
  if (!note.empty()) out["note"] = note;
  return out;
}

std::size_t SweepReport::agreements() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.agree; }));
}

std::size_t SweepReport::disagreements() const { return records.size() - agreements(); }

std::size_t SweepReport::flagged() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.agree && r.flagged; }));
}

std::size_t SweepReport::unflagged_disagreements() const { return disagreements() - flagged(); }

nlohmann::json SweepReport::to_json(bool include_records) const {
  nlohmann::json out = {{"id", id},
                        {"title", title},
                        {"kind", kind},
                        {"family", family},
                        {"instances", records.size() + skipped},
                        {"checked", records.size()},
                        {"skipped", skipped},
                        {"agreements", agreements()},
                        {"disagreements", disagreements()},
                        {"flagged", flagged()},
                        {"unflagged_disagreements", unflagged_disagreements()}};
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json listed = nlohmann::json::array();
  for (const auto& r : records) {
    if (!r.agree) counterexamples.push_back(r.to_json());
    if (include_records) listed.push_back(r.to_json());
  }
  out["counterexamples"] = counterexamples;
  if (include_records) out["records"] = listed;
  if (!evidence.empty()) out["evidence"] = evidence;
  return out;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace f2sand
