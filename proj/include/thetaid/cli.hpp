#pragma once

#include <iosfwd>

namespace thetaid::cli
{

// Exit codes: 0 success, 1 a verification failed, 2 usage or configuration error.
int run(int argc, const char *const *argv);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace thetaid::cli
