/**
 * JSON form of a Z2-CW complex (format "z2cw", version 1). See docs/FORMAT.md.
 */

#ifndef Z2COH_SERIALIZE_HPP
#define Z2COH_SERIALIZE_HPP

#include <string>

#include "z2coh/zcw.hpp"

namespace z2coh {

/// Deterministic pretty-printed JSON, ending in a newline.
std::string to_json(const Z2CwComplex& x);

/**
 * Inverse of to_json. Throws ParseError for malformed JSON (with line and
 * column) and InvalidComplex when the document does not match the schema.
 * Semantic checks (involution, equivariance, ...) are left to validate().
 */
Z2CwComplex from_json(const std::string& text);

/// 64-bit FNV-1a hash of to_json(x), as 16 hex digits.
std::string content_hash(const Z2CwComplex& x);

}   // namespace z2coh

#endif
