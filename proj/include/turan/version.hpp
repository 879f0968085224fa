#ifndef TURAN_VERSION_HPP
#define TURAN_VERSION_HPP

namespace turan {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace turan

#endif  // TURAN_VERSION_HPP
