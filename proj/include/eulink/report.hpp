#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace eulink {

enum class Verdict { pass, obstruction, error };

std::string verdict_name(Verdict v);
int verdict_exit_code(Verdict v);

// Deterministic line-oriented report: "key: value" lines in insertion order,
// certificates, and a final VERDICT line. The JSON form carries the same
// data.
class Report {
  public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, long long value);
    void add_certificate(const std::string& text);
    void set_verdict(Verdict v);
    void merge_verdict(Verdict v);  // keeps the worst of the two

    Verdict verdict() const { return verdict_; }
    int exit_code() const { return verdict_exit_code(verdict_); }

    std::string to_text() const;
    nlohmann::json to_json() const;

  private:
    std::vector<std::pair<std::string, std::string>> lines_;
    std::vector<std::string> certificates_;
    Verdict verdict_ = Verdict::pass;
};

}  // namespace eulink
