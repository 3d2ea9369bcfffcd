#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace isac::detail {

/// Plain SHA-1, hex digest. Used only for run-record content hashes.
std::string sha1_hex(std::string_view data);

}  // namespace isac::detail
