#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Service Layer Package
""" 
