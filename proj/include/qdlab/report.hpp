#pragma once

#include <string>
#include <vector>

#include "qdlab/moments.hpp"
#include "qdlab/sievelab.hpp"

// CSV/JSON emitters with deterministic formatting, plus the identity-suite
// report schema.

namespace qdlab::report {

std::string format_double(double v);  // %.17g, locale-free

uint64_t fnv1a(const std::string& s);

void write_moment_csv(const std::string& path,
                      const std::vector<moments::MomentReport>& rows);
void write_moment_json(const std::string& path,
                       const std::vector<moments::MomentReport>& rows,
                       const std::string& config_string);

void write_sieve_csv(const std::string& path,
                     const std::vector<sievelab::SieveCell>& cells);
void write_sieve_json(const std::string& path,
                      const std::vector<sievelab::SieveCell>& cells,
                      const std::string& config_string);

struct IdentitySuiteResult {
  std::string identity;
  long long points;
  double max_residual;
  double tolerance;
  uint64_t seed;
  std::string cutoffs;
  bool pass;
};

void write_identity_json(const std::string& path,
                         const std::vector<IdentitySuiteResult>& results);

}  // namespace qdlab::report
