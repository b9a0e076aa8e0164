#include "qdlab/report.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace qdlab::report {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw std::runtime_error("cannot open " + path);
  std::fwrite(text.data(), 1, text.size(), fp);
  std::fclose(fp);
}

json shift_json(const moments::Shift4& s) {
  json a = json::array();
  for (int i = 0; i < 4; ++i)
    a.push_back({{"re", s.alpha[i].real()}, {"im", s.alpha[i].imag()}});
  return {{"alpha", a},
          {"log_x", s.log_x},
          {"admissible", s.admissible},
          {"margin", s.margin}};
}

}  // namespace

void write_moment_csv(const std::string& path,
                      const std::vector<moments::MomentReport>& rows) {
  std::string out =
      "X,alpha1_re,alpha1_im,alpha2_re,alpha2_im,alpha3_re,alpha3_im,"
      "alpha4_re,alpha4_im,empirical_re,empirical_im,predicted_re,"
      "predicted_im,ratio_re,ratio_im,d_count,seconds\n";
  for (const auto& r : rows) {
    out += std::to_string(r.X);
    for (int i = 0; i < 4; ++i) {
      out += "," + format_double(r.shifts.alpha[i].real());
      out += "," + format_double(r.shifts.alpha[i].imag());
    }
    out += "," + format_double(r.empirical.real());
    out += "," + format_double(r.empirical.imag());
    out += "," + format_double(r.predicted.real());
    out += "," + format_double(r.predicted.imag());
    out += "," + format_double(r.ratio.real());
    out += "," + format_double(r.ratio.imag());
    out += "," + std::to_string(r.d_count);
    out += "," + format_double(r.runtime_seconds);
    out += "\n";
  }
  write_text(path, out);
}

void write_moment_json(const std::string& path,
                       const std::vector<moments::MomentReport>& rows,
                       const std::string& config_string) {
  json j;
  j["config"] = config_string;
  j["config_hash"] = fnv1a(config_string);
  j["rows"] = json::array();
  for (const auto& r : rows) {
    j["rows"].push_back(
        {{"X", r.X},
         {"shifts", shift_json(r.shifts)},
         {"phi", r.phi_label},
         {"empirical", {{"re", r.empirical.real()}, {"im", r.empirical.imag()}}},
         {"predicted", {{"re", r.predicted.real()}, {"im", r.predicted.imag()}}},
         {"ratio", {{"re", r.ratio.real()}, {"im", r.ratio.imag()}}},
         {"d_count", r.d_count},
         {"seconds", r.runtime_seconds},
         {"max_afe_tail", r.max_afe_tail},
         {"ok", r.ok},
         {"error", r.error}});
  }
  write_text(path, j.dump(2) + "\n");
}

void write_sieve_csv(const std::string& path,
                     const std::vector<sievelab::SieveCell>& cells) {
  std::string out = "M,N,t,s_flat,s_full,envelope,ratio\n";
  for (const auto& c : cells) {
    out += std::to_string(c.M);
    out += "," + format_double(c.N);
    out += "," + format_double(c.t);
    out += "," + format_double(c.flat);
    out += "," + format_double(c.full);
    out += "," + format_double(c.envelope);
    out += "," + format_double(c.ratio);
    out += "\n";
  }
  write_text(path, out);
}

void write_sieve_json(const std::string& path,
                      const std::vector<sievelab::SieveCell>& cells,
                      const std::string& config_string) {
  json j;
  j["config"] = config_string;
  j["grid_hash"] = fnv1a(config_string);
  double max_ratio = 0.0;
  j["cells"] = json::array();
  for (const auto& c : cells) {
    max_ratio = std::max(max_ratio, c.ratio);
    j["cells"].push_back({{"M", c.M},
                          {"N", c.N},
                          {"t", c.t},
                          {"s_flat", c.flat},
                          {"s_full", c.full},
                          {"envelope", c.envelope},
                          {"ratio", c.ratio}});
  }
  j["max_ratio"] = max_ratio;
  write_text(path, j.dump(2) + "\n");
}

void write_identity_json(const std::string& path,
                         const std::vector<IdentitySuiteResult>& results) {
  json j = json::array();
  for (const auto& r : results) {
    j.push_back({{"identity", r.identity},
                 {"points", r.points},
                 {"max_residual", r.max_residual},
                 {"tolerance", r.tolerance},
                 {"seed", r.seed},
                 {"cutoffs", r.cutoffs},
                 {"pass", r.pass}});
  }
  write_text(path, j.dump(2) + "\n");
}

}  // namespace qdlab::report
