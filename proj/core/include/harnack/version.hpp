#pragma once

namespace harnack {

/// Library version, e.g. "0.3.0".
const char* version() noexcept;

}  // namespace harnack
