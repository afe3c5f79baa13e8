"""python -m cli (con src/ en el PYTHONPATH)"""

from .main import main

main()
