#pragma once

#include "wmod/errors.hpp"
#include "wmod/arith.hpp"
#include "wmod/binary_form.hpp"
#include "wmod/invariants.hpp"
#include "wmod/weighted.hpp"
#include "wmod/reduction.hpp"
#include "wmod/laska.hpp"
#include "wmod/parse.hpp"
#include "wmod/store.hpp"
