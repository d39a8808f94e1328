#pragma once

#include "relfree/arith.hpp"
#include "relfree/grpext.hpp"
#include "relfree/intlinalg.hpp"
#include "relfree/lift.hpp"
#include "relfree/metabelian.hpp"
#include "relfree/report.hpp"
#include "relfree/sampling.hpp"
#include "relfree/serialize.hpp"
#include "relfree/spectra.hpp"
#include "relfree/words.hpp"
