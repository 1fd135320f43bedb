#pragma once

#include <string>
#include <string_view>

#include "cfrac/errors.hpp"
#include "cfrac/irrationality.hpp"

namespace cfrac::cli {

/// Malformed or incomplete certificate document.
class CertificateFormatError : public Error {
 public:
  using Error::Error;
};

/// Certificate as JSON, keys in this fixed order:
///   x, y, reducedX, reducedY, tailIndex, checkedPrefixDepth, thresholdIndex,
///   verdict, engineVersion
/// Integers are decimal strings.
std::string certificate_to_json(const IrrationalityCertificate& cert);

/// Inverse of certificate_to_json. The closed-form coefficients are rebuilt
/// from the reduced pair; only the threshold index is read from the document.
/// Throws CertificateFormatError.
IrrationalityCertificate certificate_from_json(std::string_view text);

}  // namespace cfrac::cli
