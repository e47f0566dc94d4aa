#include "harnack/version.hpp"

namespace harnack {

const char* version() noexcept { return HARNACK_VERSION; }

}  // namespace harnack
