// Umbrella header for the game engine and verification kernels.
#pragma once

#include "welter/board.hpp"
#include "welter/enumerate.hpp"
#include "welter/grundy.hpp"
#include "welter/oracle.hpp"
#include "welter/padic.hpp"
#include "welter/repcheck.hpp"
#include "welter/report.hpp"
#include "welter/rules.hpp"
#include "welter/saturation.hpp"
#include "welter/verify.hpp"
