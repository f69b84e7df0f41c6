#include "jcr/lcm_scan.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "jcr/diophantine.hpp"
#include "jcr/error.hpp"
#include "jcr/parallel.hpp"

namespace jcr {

std::vector<ScanRecord> scan_lcm(const Rational& d, std::uint64_t count, unsigned workers) {
  if (d.sign() <= 0) throw Error(ErrorCode::domain, "scan step d must be > 0");
  if (count == 0) throw Error(ErrorCode::domain, "scan count must be >= 1");
  std::vector<ScanRecord> records(count);
  parallel_chunks(count, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      ScanRecord& r = records[i];
      r.n = i + 1;
      r.t = Rational(Integer(r.n)) * d;
      if (abs(r.t) == Rational(1)) {
        r.skipped = true;
        r.lcm = 0;
        continue;
      }
      HyperbolaPoint p = unit_hyperbola_point(r.t);
      mpz_lcm(r.lcm.get_mpz_t(), p.x.raw().get_den_mpz_t(), p.y.raw().get_den_mpz_t());
    }
  });
  return records;
}

std::string format_scan_csv(std::span<const ScanRecord> records) {
  std::string out = "n,t,lcm,skipped\n";
  for (const auto& r : records)
    out += std::to_string(r.n) + "," + r.t.str() + "," + r.lcm.get_str() + "," + (r.skipped ? "1" : "0") + "\n";
  return out;
}

double log10_integer(const Integer& m) {
  if (m <= 0) throw Error(ErrorCode::domain, "log10 of nonpositive integer");
  std::string digits = m.get_str();
  if (digits.front() == '1' && digits.find_first_not_of('0', 1) == std::string::npos)
    return static_cast<double>(digits.size() - 1);
  long exp2 = 0;
  double mantissa = mpz_get_d_2exp(&exp2, m.get_mpz_t());
  return std::log10(mantissa) + static_cast<double>(exp2) * std::log10(2.0);
}

std::vector<HistogramBin> histogram(std::span<const ScanRecord> records, double width) {
  if (!(width > 0)) throw Error(ErrorCode::domain, "histogram bin width must be > 0");
  std::map<long long, std::uint64_t> counts;
  for (const auto& r : records) {
    if (r.skipped) continue;
    ++counts[static_cast<long long>(std::floor(log10_integer(r.lcm) / width))];
  }
  std::vector<HistogramBin> out;
  for (const auto& [bin, c] : counts) out.push_back({static_cast<double>(bin) * width, c});
  return out;
}

std::string format_histogram_csv(std::span<const HistogramBin> bins) {
  std::string out = "bin_lower_log10,count\n";
  char buf[48];
  for (const auto& b : bins) {
    std::snprintf(buf, sizeof buf, "%.10g", b.lower_log10);
    out += std::string(buf) + "," + std::to_string(b.count) + "\n";
  }
  return out;
}

}  // namespace jcr
