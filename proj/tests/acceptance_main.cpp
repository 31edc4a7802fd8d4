#include <cstdio>
#include "vpt/verify.hpp"
int main(){int rc=0;for(const auto& r: vpt::verify::run_acceptance()){std::printf("[%s] %2d %-26s (%.2fs) %s\n", r.passed?"PASS":"FAIL", r.id, r.name.c_str(), r.seconds, r.detail.c_str()); if(!r.passed) rc=1;} return rc;}
