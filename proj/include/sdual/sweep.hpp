#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <json.hpp>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sdual/families.hpp"

namespace sdual {

unsigned default_jobs();

// Applies fn to every item on up to `jobs` threads; results keep the input order and the
// first exception (in input order) is rethrown after all workers finish.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, unsigned jobs, F fn)
    -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs ? jobs : default_jobs(),
                                               static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<R> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

struct SweepOptions {
  long long grid_bound = 60;
  unsigned jobs = 0;
  // Require every grid member to pass, not only those inside the regime.
  bool strict = false;
  std::optional<FamilyDescriptor> family;
  std::string name;
};

struct SuiteResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string summary;
  nlohmann::json detail = nlohmann::json::object();
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_ids();
SuiteResult run_suite(const std::string& id, const SweepOptions& opts);

SuiteResult weights_suite(const SweepOptions& opts);
SuiteResult tables_suite(const SweepOptions& opts);
SuiteResult duality_suite(const SweepOptions& opts);
SuiteResult calibration_check(const SweepOptions& opts);
SuiteResult zeta_suite(const SweepOptions& opts);
SuiteResult enumeration_suite(const SweepOptions& opts);
SuiteResult bimodal_suite(const SweepOptions& opts);
SuiteResult dynkin_suite(const SweepOptions& opts);

// Family of a fixture row with integer params.
FamilyDescriptor family_of_row(const nlohmann::json& row);
// Dolgachev/Gabrielov strings such as "2,2;2,3" or "2,3,10".
std::vector<long long> parse_tuple(const std::string& s);

}  // namespace sdual
