#pragma once

#include "arith.hpp"
#include "classify.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "error.hpp"
