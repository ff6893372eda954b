#pragma once

namespace switchmix {

/// Version tag carried by every JSON document the library writes.
inline constexpr const char* kSchemaVersion = "switchmix/1";

}  // namespace switchmix
