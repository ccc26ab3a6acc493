#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

namespace sdual {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Fixtures {
 public:
  explicit Fixtures(nlohmann::json data);
  static Fixtures embedded();
  static Fixtures from_file(const std::string& path);

  const nlohmann::json& data() const { return data_; }
  const nlohmann::json& table(const std::string& id) const;
  // First row of `table` whose string field `key` equals `value`.
  const nlohmann::json& row(const std::string& table, const std::string& key,
                            const std::string& value) const;

 private:
  nlohmann::json data_;
};

// Process-wide fixture set used by the table accessors; defaults to the embedded copy.
const Fixtures& active_fixtures();
void set_active_fixtures(Fixtures f);

}  // namespace sdual
