"""References to be imported and injected throughout the package."""

from hallbridge.due import Doi

BRIDGELAND_2013 = Doi("10.4007/annals.2013.177.2.9")

RINGEL_1990 = Doi("10.1007/BF01231516")
