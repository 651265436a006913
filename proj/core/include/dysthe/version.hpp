#pragma once

namespace dysthe {

// Library version string, echoed into run manifests for provenance.
inline constexpr const char* kVersion = "1.0.0";

}  // namespace dysthe
