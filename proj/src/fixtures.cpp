#include "sdual/fixtures.hpp"

#include <fstream>
#include <memory>
#include <mutex>

#include "fixtures_data.hpp"

namespace sdual {

namespace {

std::mutex g_mutex;
std::shared_ptr<const Fixtures> g_active;

}  // namespace

Fixtures::Fixtures(nlohmann::json data) : data_(std::move(data)) {
  if (!data_.is_object() || !data_.contains("version"))
    throw FixtureError("fixture file lacks a version field");
}

Fixtures Fixtures::embedded() {
  return Fixtures(nlohmann::json::parse(detail::kEmbeddedFixtures));
}

Fixtures Fixtures::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture file '" + path + "'");
  try {
    return Fixtures(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError("malformed fixture file '" + path + "': " + e.what());
  }
}

const nlohmann::json& Fixtures::table(const std::string& id) const {
  auto it = data_.find(id);
  if (it == data_.end()) throw FixtureError("fixture table '" + id + "' missing");
  return *it;
}

const nlohmann::json& Fixtures::row(const std::string& table_id, const std::string& key,
                                    const std::string& value) const {
  for (const auto& r : table(table_id))
    if (r.contains(key) && r[key].is_string() && r[key].get<std::string>() == value) return r;
  throw FixtureError("no row with " + key + " = '" + value + "' in " + table_id);
}

const Fixtures& active_fixtures() {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (!g_active) g_active = std::make_shared<const Fixtures>(Fixtures::embedded());
  return *g_active;
}

void set_active_fixtures(Fixtures f) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_active = std::make_shared<const Fixtures>(std::move(f));
}

}  // namespace sdual
