#include "cfrac/cli/certificate_json.hpp"

#include <json.hpp>

namespace cfrac::cli {

using Json = nlohmann::ordered_json;

std::string certificate_to_json(const IrrationalityCertificate& cert) {
  Json j;
  j["x"] = cert.x.to_string();
  j["y"] = cert.y.to_string();
  j["reducedX"] = cert.reduced_x.to_string();
  j["reducedY"] = cert.reduced_y.to_string();
  j["tailIndex"] = std::to_string(cert.tail_index);
  j["checkedPrefixDepth"] = std::to_string(cert.checked_prefix_depth);
  j["thresholdIndex"] = std::to_string(cert.closed_form.threshold_index);
  j["verdict"] = to_string(cert.verdict);
  j["engineVersion"] = cert.engine_version;
  return j.dump(2) + "\n";
}

namespace {

const std::string& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw CertificateFormatError(std::string("missing field '") + key + "'");
  if (!it->is_string()) {
    throw CertificateFormatError(std::string("field '") + key + "' must be a string");
  }
  return it->get_ref<const std::string&>();
}

ExactInt integer_field(const Json& j, const char* key) {
  try {
    return ExactInt::parse(field(j, key));
  } catch (const DomainError&) {
    throw CertificateFormatError(std::string("field '") + key + "' is not a decimal integer");
  }
}

std::size_t index_field(const Json& j, const char* key) {
  ExactInt v = integer_field(j, key);
  if (!v.fits_u64()) throw CertificateFormatError(std::string("field '") + key + "' out of range");
  return v.to_u64();
}

}  // namespace

IrrationalityCertificate certificate_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CertificateFormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw CertificateFormatError("certificate must be a JSON object");

  IrrationalityCertificate cert;
  cert.x = integer_field(j, "x");
  cert.y = integer_field(j, "y");
  cert.reduced_x = integer_field(j, "reducedX");
  cert.reduced_y = integer_field(j, "reducedY");
  cert.tail_index = index_field(j, "tailIndex");
  cert.checked_prefix_depth = index_field(j, "checkedPrefixDepth");
  try {
    cert.verdict = parse_verdict(field(j, "verdict"));
  } catch (const DomainError& e) {
    throw CertificateFormatError(e.what());
  }
  cert.engine_version = field(j, "engineVersion");

  std::size_t threshold = index_field(j, "thresholdIndex");
  if (cert.verdict == Verdict::CertifiedIrrational) {
    ExactInt ax = cert.reduced_x.abs();
    cert.closed_form = TailArgument{ExactInt(2) * cert.reduced_y, -cert.reduced_y, ax * ax,
                                    threshold};
  } else {
    cert.closed_form.threshold_index = threshold;
  }
  return cert;
}

}  // namespace cfrac::cli
