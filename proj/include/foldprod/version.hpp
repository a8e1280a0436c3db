#ifndef FOLDPROD_VERSION_HPP
#define FOLDPROD_VERSION_HPP

namespace foldprod {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace foldprod

#endif
