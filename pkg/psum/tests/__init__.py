from .groups import *
from .orderings import *
from .constructive import *
from .verifier import *
from .heffter import *
from .lengths import *
from .properties import *
from .models import *
from .commands import *
