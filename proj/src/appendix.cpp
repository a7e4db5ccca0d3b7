#include "appendix_data.hpp"
#include "f2sand/harness.hpp"
#include "f2sand/json_io.hpp"

namespace f2sand {

using nlohmann::json;

const std::vector<AppendixCase>& appendix_cases() {
  static const std::vector<AppendixCase> cases = [] {
    std::vector<AppendixCase> out;
    const auto doc = json::parse(kAppendixJson);
    for (const auto& c : doc.at("cases")) {
      out.push_back({c.at("id").get<std::string>(),
                     c.at("multiplicities").get<std::vector<std::uint64_t>>(),
                     c.at("claimed").at("alpha").get<std::vector<std::string>>(),
                     c.at("claimed").at("d").get<unsigned>(),
                     c.at("known_discrepancy").get<bool>(),
                     c.at("commented_out").get<bool>(),
                     c.at("note").get<std::string>()});
    }
    return out;
  }();
  return cases;
}

SweepReport reproduce_appendix(const std::string& case_id, const RunOptions& options) {
  std::vector<const AppendixCase*> selected;
  for (const auto& c : appendix_cases()) {
    if (case_id == "all" || c.id == case_id) selected.push_back(&c);
  }
  if (selected.empty()) throw std::invalid_argument("unknown appendix case '" + case_id + "'");

  SandpileOracle oracle(options.cache);
  std::vector<std::optional<InstanceRecord>> records(selected.size());
  parallel_for(selected.size(), options.jobs, [&](std::size_t i) {
    const auto& c = *selected[i];
    const auto m = MultiplicityVector::from_tuple(4, c.multiplicities);
    auto diag = oracle.full_diagonal(m);
    diag.pop_back();  // the alpha list omits the zero
    std::vector<std::string> alpha;
    for (const auto& s : diag) alpha.push_back(s.get_str());
    const auto d = oracle.group(m).even_factor_count();
    InstanceRecord rec{m, {{"alpha", c.alpha}, {"d", c.d}}, {{"alpha", alpha}, {"d", d}}};
    rec.agree = rec.predicted == rec.observed;
    rec.flagged = !rec.agree && c.known_discrepancy;
    rec.note = c.id + (c.note.empty() ? "" : ": " + c.note);
    rec.observed["match"] = rec.agree;
    records[i] = std::move(rec);
  });

  SweepReport report;
  report.id = case_id;
  report.title = "r = 4 invariant factor tables";
  report.kind = "appendix";
  report.family = {{"kind", "appendix"}, {"case", case_id}};
  for (auto& r : records) report.records.push_back(std::move(*r));
  report.evidence = {{"match", report.disagreements() == 0}};
  return report;
}

}  // namespace f2sand
