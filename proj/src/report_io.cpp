#include "fibzeta/report_io.hpp"

#include <sstream>

namespace fibzeta {

namespace {

constexpr int kMachinePlaces = 9;
constexpr int kTablePlaces = 6;

ExactRational observed_ratio(u64 count, u64 pi_x) {
  return ExactRational(static_cast<i128>(count), static_cast<i128>(pi_x));
}

void require_annotated(const DensityReport& r) {
  for (const auto& e : r.entries)
    if (!e.annotated) throw std::invalid_argument("report: compare() has not run");
  for (const auto& e : r.joint)
    if (!e.annotated) throw std::invalid_argument("report: compare() has not run");
}

const char* scope_label(const JointEntry& e) {
  return e.outside_proof_scope ? "outside proof scope" : "";
}

}  // namespace

std::string report_to_json(const DensityReport& r) {
  require_annotated(r);
  std::ostringstream os;
  os << "{\"x\":" << r.x << ",\"pi_x\":" << r.pi_x << ",\"entries\":[";
  for (size_t idx = 0; idx < r.entries.size(); ++idx) {
    const auto& e = r.entries[idx];
    if (idx) os << ",";
    os << "{\"m\":" << e.m << ",\"count\":" << e.count << ",\"observed\":"
       << observed_ratio(e.count, r.pi_x).to_decimal_string(kMachinePlaces)
       << ",\"predicted_num\":" << to_string_i128(e.predicted.num())
       << ",\"predicted_den\":" << to_string_i128(e.predicted.den())
       << ",\"abs_error\":" << e.abs_error.to_decimal_string(kMachinePlaces) << "}";
  }
  os << "],\"joint\":[";
  for (size_t idx = 0; idx < r.joint.size(); ++idx) {
    const auto& e = r.joint[idx];
    if (idx) os << ",";
    os << "{\"q\":" << e.q << ",\"i\":" << e.i << ",\"j\":" << e.j
       << ",\"count\":" << e.count << ",\"observed\":"
       << observed_ratio(e.count, r.pi_x).to_decimal_string(kMachinePlaces)
       << ",\"predicted_num\":" << to_string_i128(e.predicted.num())
       << ",\"predicted_den\":" << to_string_i128(e.predicted.den())
       << ",\"abs_error\":" << e.abs_error.to_decimal_string(kMachinePlaces)
       << ",\"scope_flag\":\"" << scope_label(e) << "\"}";
  }
  os << "]}\n";
  return os.str();
}

std::string report_to_csv(const DensityReport& r) {
  require_annotated(r);
  std::ostringstream os;
  os << "x,pi_x\n" << r.x << "," << r.pi_x << "\n";
  os << "m,count,observed,predicted_num,predicted_den,abs_error\n";
  for (const auto& e : r.entries) {
    os << e.m << "," << e.count << ","
       << observed_ratio(e.count, r.pi_x).to_decimal_string(kMachinePlaces) << ","
       << to_string_i128(e.predicted.num()) << ","
       << to_string_i128(e.predicted.den()) << ","
       << e.abs_error.to_decimal_string(kMachinePlaces) << "\n";
  }
  os << "q,i,j,count,observed,predicted_num,predicted_den,abs_error,scope_flag\n";
  for (const auto& e : r.joint) {
    os << e.q << "," << e.i << "," << e.j << "," << e.count << ","
       << observed_ratio(e.count, r.pi_x).to_decimal_string(kMachinePlaces) << ","
       << to_string_i128(e.predicted.num()) << ","
       << to_string_i128(e.predicted.den()) << ","
       << e.abs_error.to_decimal_string(kMachinePlaces) << ","
       << scope_label(e) << "\n";
  }
  return os.str();
}

std::string report_to_table(const DensityReport& r) {
  require_annotated(r);
  std::ostringstream os;
  os << "x = " << r.x << ", pi(x) = " << r.pi_x << "\n";
  if (!r.entries.empty()) {
    os << "\n  m     count      observed   predicted            abs_error\n";
    for (const auto& e : r.entries) {
      std::string pred = e.predicted.to_fraction_string() + " = " +
                         e.predicted.to_decimal_string(kTablePlaces);
      os << "  " << e.m;
      os << std::string(e.m < 10 ? 4 : (e.m < 100 ? 3 : 2), ' ');
      std::string cnt = std::to_string(e.count);
      os << cnt << std::string(cnt.size() < 10 ? 10 - cnt.size() : 1, ' ')
         << observed_ratio(e.count, r.pi_x).to_decimal_string(kTablePlaces) << "   "
         << pred << std::string(pred.size() < 21 ? 21 - pred.size() : 1, ' ')
         << e.abs_error.to_decimal_string(kTablePlaces)
         << (e.flagged ? "  EXCEEDS TOLERANCE" : "") << "\n";
    }
  }
  if (!r.joint.empty()) {
    os << "\n  q  i  j   count      observed   predicted            abs_error\n";
    for (const auto& e : r.joint) {
      std::string pred = e.predicted.to_fraction_string() + " = " +
                         e.predicted.to_decimal_string(kTablePlaces);
      std::string cnt = std::to_string(e.count);
      os << "  " << e.q << "  " << e.i << "  " << e.j << "   " << cnt
         << std::string(cnt.size() < 10 ? 10 - cnt.size() : 1, ' ')
         << observed_ratio(e.count, r.pi_x).to_decimal_string(kTablePlaces) << "   "
         << pred << std::string(pred.size() < 21 ? 21 - pred.size() : 1, ' ')
         << e.abs_error.to_decimal_string(kTablePlaces)
         << (e.flagged ? "  EXCEEDS TOLERANCE" : "")
         << (e.outside_proof_scope ? "  [outside proof scope]" : "") << "\n";
    }
  }
  return os.str();
}

}  // namespace fibzeta
