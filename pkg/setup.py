import setuptools
from setuptools import setup

setup(name='blaschke',
      version='0.1.0',
      description='Numerical toolkit for Blaschke products, Frostman shifts and indestructibility checks',
      license='MIT',
      packages=setuptools.find_packages(),
      python_requires='>=3.6',
      install_requires=['numpy', 'scipy', 'pandas'],
      extras_require={'test': ['hypothesis']},
      entry_points={
          'console_scripts': ['blaschke = blaschke.cli:main']
      })
