#pragma once

#include "heisrep/rational.hpp"
#include "heisrep/matrix.hpp"
#include "heisrep/lie_algebra.hpp"
#include "heisrep/construct.hpp"
#include "heisrep/repcheck.hpp"
#include "heisrep/mu.hpp"
#include "heisrep/io.hpp"
#include "heisrep/random.hpp"
