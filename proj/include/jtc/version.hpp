#pragma once

#ifndef JTC_VERSION_STRING
#define JTC_VERSION_STRING "0.0.0-dev"
#endif

namespace jtc {
inline constexpr const char* kVersion = JTC_VERSION_STRING;
}
