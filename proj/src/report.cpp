#include <sstream>

#include "finitehyper/harness.hpp"
#include "json.hpp"

namespace finitehyper {

namespace {

using Json = nlohmann::ordered_json;

Json report_json(const VerificationReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json j;
  j["identity"] = r.identity;
  j["params"] = std::move(params);
  j["n"] = r.n;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["equal"] = r.equal;
  j["seed"] = r.seed;
  j["rejected"] = r.rejected;
  // Integral zero keeps untimed output byte-stable.
  if (r.ms == 0) {
    j["ms"] = 0;
  } else {
    j["ms"] = r.ms;
  }
  return j;
}

Json limit_json(const LimitReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json points = Json::array();
  for (const auto& p : r.points) {
    points.push_back(Json{{"n", p.n}, {"value", p.value}, {"error", p.error}});
  }
  Json j;
  j["limit"] = r.limit_id;
  j["params"] = std::move(params);
  j["target"] = r.limit;
  j["points"] = std::move(points);
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

std::string params_text(const std::vector<std::pair<std::string, std::string>>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + '=' + v;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string number(double v) { return Json(v).dump(); }

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "md" || name == "markdown") return ReportFormat::Markdown;
  throw ConfigError("unknown report format: " + name);
}

std::string emit_report(const std::vector<VerificationReport>& reports, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json: {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      return arr.dump(reports.empty() ? -1 : 2);
    }
    case ReportFormat::Csv:
      out << "identity,params,n,lhs,rhs,equal,seed,rejected,ms\n";
      for (const auto& r : reports) {
        out << csv_field(r.identity) << ',' << csv_field(params_text(r.params)) << ',' << r.n
            << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ','
            << (r.equal ? "true" : "false") << ',' << r.seed << ',' << r.rejected << ','
            << number(r.ms) << '\n';
      }
      return out.str();
    case ReportFormat::Markdown:
      out << "| identity | params | n | lhs | rhs | equal | seed | rejected | ms |\n";
      out << "|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& r : reports) {
        out << "| " << md_cell(r.identity) << " | " << md_cell(params_text(r.params)) << " | "
            << r.n << " | " << md_cell(r.lhs) << " | " << md_cell(r.rhs) << " | "
            << (r.equal ? "yes" : "NO") << " | " << r.seed << " | " << r.rejected << " | "
            << number(r.ms) << " |\n";
      }
      return out.str();
  }
  return {};
}

std::string emit_limits(const std::vector<LimitReport>& limits, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json: {
      Json arr = Json::array();
      for (const auto& r : limits) arr.push_back(limit_json(r));
      return arr.dump(limits.empty() ? -1 : 2);
    }
    case ReportFormat::Csv:
      out << "limit,params,target,n,value,error,tolerance,pass\n";
      for (const auto& r : limits) {
        std::string params;
        for (const auto& [k, v] : r.params) {
          if (!params.empty()) params += ';';
          params += k + '=' + number(v);
        }
        for (const auto& p : r.points) {
          out << r.limit_id << ',' << params << ',' << number(r.limit) << ',' << number(p.n)
              << ',' << number(p.value) << ',' << number(p.error) << ',' << number(r.tolerance)
              << ',' << (r.pass ? "true" : "false") << '\n';
        }
      }
      return out.str();
    case ReportFormat::Markdown:
      out << "| limit | params | target | final error | pass |\n";
      out << "|---|---|---|---|---|\n";
      for (const auto& r : limits) {
        std::string params;
        for (const auto& [k, v] : r.params) {
          if (!params.empty()) params += ' ';
          params += k + '=' + number(v);
        }
        out << "| " << r.limit_id << " | " << params << " | " << number(r.limit) << " | "
            << (r.points.empty() ? std::string("-") : number(r.points.back().error)) << " | "
            << (r.pass ? "yes" : "NO") << " |\n";
      }
      return out.str();
  }
  return {};
}

std::string emit_suite_json(const std::vector<VerificationReport>& reports,
                            const std::vector<LimitReport>& limits) {
  Json reps = Json::array();
  for (const auto& r : reports) reps.push_back(report_json(r));
  Json lims = Json::array();
  for (const auto& r : limits) lims.push_back(limit_json(r));
  Json j;
  j["reports"] = std::move(reps);
  j["limits"] = std::move(lims);
  return j.dump(2);
}

}  // namespace finitehyper
