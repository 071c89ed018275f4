#ifndef ZLAB_VERSION_HPP
#define ZLAB_VERSION_HPP

namespace zlab {

// Embedded in every machine-readable report; golden files are tied to it.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace zlab

#endif  // ZLAB_VERSION_HPP
