#pragma once

#include "mullineux/charges.hpp"
#include "mullineux/core.hpp"
#include "mullineux/crystal.hpp"
#include "mullineux/error.hpp"
#include "mullineux/multisegments.hpp"
#include "mullineux/mullineux.hpp"
#include "mullineux/symbols.hpp"
#include "mullineux/text.hpp"
#include "mullineux/theta.hpp"
#include "mullineux/trace.hpp"
